//! The three output formats of a truncated series, and an exact JSON round trip.

use affine_chars::formulas::{CharacterRequest, FormulaId};
use affine_chars::lie::RootType;
use affine_chars::series::{from_json, to_json, to_pretty, to_tsv};

fn main() -> affine_chars::Result<()> {
    let ch = CharacterRequest::new(FormulaId::SlHalfFirst, RootType::A, 2)
        .with_s(1)
        .character(2)?;
    let json = to_json(&ch);
    println!("{json}\n");
    print!("{}\n{}", to_tsv(&ch), to_pretty(&ch));
    let back = from_json(&json)?;
    assert_eq!(back, ch);
    assert_eq!(to_json(&back), json);
    println!("round trip exact");
    Ok(())
}
