//! Exact truncated characters of affine Lie algebra modules at negative
//! level, computed from alternating lattice sums and checked against
//! independent free-field and product-side oracles.
//!
//! Every capability has a runnable example:
//!
//! - `superdenominator`: product against sum sides for `sl(n|1)` and `spo(2n'|2)`
//! - `sl_half_lattice`: level -1 characters of affine `sl_n` against the Fock space
//! - `sl2_two_term`: the two-term collapse for affine `sl_2`
//! - `sp_characters`: affine `sp_n` modules against restriction and the sigma split
//! - `deligne_series`: weights of `D4`, `E6`, `E7`, `E8` and their characters
//! - `q_dimension`: the q-dimension along three paths
//! - `verify_suite`: every identity check with one line each
//! - `series_formats`: JSON, TSV and pretty output
//!
//! ```text
//! cargo run --release --example deligne_series -- D 4 -1
//! ```
//!
//! Series are [`series::ExpSeries`]: integer coefficients on monomials
//! `e^{base - sum k_i alpha_i}` truncated by total height `sum k_i`.

pub mod error;
pub mod formulas;
pub mod lie;
pub mod linalg;
pub mod oracles;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
