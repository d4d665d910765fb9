//! Product and sum sides of the affine superdenominators, compared term by term.
//!
//!     cargo run --release --example superdenominator -- 4 5

use affine_chars::oracles::{
    superdenominator_from_sl_characters, superdenominator_sum_sl, superdenominator_sum_spo,
};
use affine_chars::series::{superdenominator_sl, superdenominator_spo, Comparison};

fn main() -> affine_chars::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let n = args.next().unwrap_or(3) as usize;
    let order = args.next().unwrap_or(4);

    let product = superdenominator_sl(n, order);
    println!(
        "sl({n}|1) product side, {} terms to height {order}",
        product.len()
    );
    println!(
        "  vs lattice sum:          {}",
        Comparison::of(&product, &superdenominator_sum_sl(n, order)?)
    );
    println!(
        "  vs half-lattice numerators: {}",
        Comparison::of(&product, &superdenominator_from_sl_characters(n, order)?)
    );

    if n.is_multiple_of(2) {
        let n_prime = n / 2;
        let product = superdenominator_spo(n_prime, order)?;
        println!("spo({n}|2) product side, {} terms", product.len());
        println!(
            "  vs lattice sum:          {}",
            Comparison::of(&product, &superdenominator_sum_spo(n_prime, order)?)
        );
    }
    Ok(())
}
