//! For affine sl_2 at level -1 the lattice sum collapses to two terms,
//! `1 - e^{-(s+1) alpha_1}`. Prints the generic evaluation for a few `s`.

use affine_chars::formulas::{CharacterRequest, FormulaId};
use affine_chars::lie::RootType;

fn main() -> affine_chars::Result<()> {
    for s in 0..=4 {
        let num = CharacterRequest::new(FormulaId::Sl2TwoTerm, RootType::A, 1)
            .with_s(s)
            .numerator(s + 3)?;
        println!("s = {s}: {num}");
    }
    Ok(())
}
