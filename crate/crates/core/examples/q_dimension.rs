//! The q-dimension of a module along three independent paths: the lattice sum
//! weighted by Weyl dimensions, specialization of the numerator, and grade
//! sums of the full character.
//!
//!     cargo run --release --example q_dimension -- -2,0,0,0,0 4

use affine_chars::formulas::{
    q_dimension_direct, q_dimension_graded, q_dimension_specialized, CharacterRequest, FormulaId,
};
use affine_chars::lie::RootType;

fn main() -> affine_chars::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels: Vec<i64> = args
        .first()
        .map_or("-2,0,0,0,0", String::as_str)
        .split(',')
        .map(|x| x.parse().expect("integer label"))
        .collect();
    let order = args.get(1).map_or(3, |a| a.parse().expect("order"));
    let req = CharacterRequest::new(FormulaId::Deligne, RootType::D, 4).with_labels(labels);

    println!("direct      {}", q_dimension_direct(&req, order)?);
    println!("specialized {}", q_dimension_specialized(&req, order)?);
    println!("graded      {}", q_dimension_graded(&req, order)?);
    Ok(())
}
