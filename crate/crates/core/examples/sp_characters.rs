//! Level -1/2 style modules of affine sp_n realized in the charge zero Fock
//! space: the restricted lattice formula against restriction of Fock states,
//! and the vacuum and Lambda_2 modules against the sigma-eigenspace split.
//!
//!     cargo run --release --example sp_characters -- 4 3

use affine_chars::formulas::{sp_character, SpVariant};
use affine_chars::oracles::{sigma_characters, sp_restriction_oracle};
use affine_chars::series::{to_pretty, Comparison};

fn main() -> affine_chars::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let n = args.next().unwrap_or(4) as usize;
    let order = args.next().unwrap_or(3);

    for s in 1..=2 {
        let ch = sp_character(n, SpVariant::Lambda1, s, order)?;
        println!(
            "-(1+{s})L0 + {s}L1: {}",
            Comparison::of(&ch, &sp_restriction_oracle(n, s, order)?)
        );
    }

    let (vacuum, lambda2) = sigma_characters(n, order + 2)?;
    let ch0 = sp_character(n, SpVariant::Vacuum, 0, order)?;
    let ch2 = sp_character(n, SpVariant::Lambda2, 0, order)?;
    println!(
        "-L0:       {}",
        Comparison::of(&ch0, &vacuum.truncate(order))
    );
    println!(
        "-2L0 + L2: {}",
        Comparison::of(&ch2, &lambda2.truncate(order))
    );
    print!("{}", to_pretty(&ch0));
    Ok(())
}
