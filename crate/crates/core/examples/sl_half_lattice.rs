//! Level -1 characters of affine sl_n from the half-lattice formula, checked
//! against a brute-force count of fermionic Fock states.
//!
//!     cargo run --release --example sl_half_lattice -- 3 2

use affine_chars::formulas::{sl_half_lattice, Side};
use affine_chars::lie::{RootSystem, RootType};
use affine_chars::oracles::fock_sl_oracle;
use affine_chars::series::{divide_by_denominator, to_pretty, Comparison};

fn main() -> affine_chars::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let n = args.next().unwrap_or(3) as usize;
    let s = args.next().unwrap_or(1);
    let order = 4;
    let rs = RootSystem::new(RootType::A, n - 1)?;

    for side in [Side::First, Side::Last] {
        let ch = divide_by_denominator(&rs, &sl_half_lattice(n, s, side, order)?)?;
        let fock = fock_sl_oracle(n, s, side, order)?;
        println!("s = {s}, {side:?}: {}", Comparison::of(&ch, &fock));
        if side == Side::First {
            print!("{}", to_pretty(&ch));
        }
    }
    Ok(())
}
