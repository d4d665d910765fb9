//! Weights of the exceptional series passing the stabilizer conditions, and
//! what the lattice formula gives for each: integrality of the halved sum,
//! positivity, and the first q-dimension coefficients.
//!
//!     cargo run --release --example deligne_series -- D 4 -1

use affine_chars::formulas::{
    deligne_window, list_deligne, q_dimension_direct, CharacterRequest, FormulaId,
};
use affine_chars::lie::{RootSystem, RootType};
use affine_chars::verify::positivity;

fn main() -> affine_chars::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: RootType = args.first().map_or(Ok(RootType::D), |a| a.parse())?;
    let rank = args.get(1).map_or(4, |a| a.parse().expect("rank"));
    let k = args.get(2).map_or(-1, |a| a.parse().expect("level"));
    let rs = RootSystem::new(kind, rank)?;
    let window = deligne_window(&rs).expect("D4, E6, E7 or E8");

    for w in list_deligne(&rs, k, window)? {
        let labels: Vec<i64> = w
            .lambda
            .labels(&rs)
            .iter()
            .map(|m| m.to_integer())
            .collect();
        let req = CharacterRequest::new(FormulaId::Deligne, kind, rank).with_labels(labels.clone());
        let verdict = match req.character(3) {
            Ok(ch) => positivity(&ch).unwrap_or_else(|| "integral and positive".into()),
            Err(e) => format!("formula breaks down: {e}"),
        };
        let qdim = q_dimension_direct(&req, 2).map_or_else(|e| e.to_string(), |q| q.to_string());
        println!("{labels:?} alpha = {}: {verdict}; qdim {qdim}", w.alpha);
    }
    Ok(())
}
