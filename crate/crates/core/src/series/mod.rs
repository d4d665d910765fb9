//! Truncated formal exponential series and the affine weights they live over.

pub mod affine;
pub mod compare;
pub mod denominator;
pub mod exp_series;
pub mod json;
pub mod lattice;
pub mod qseries;
pub mod superdenominator;

pub use affine::{affine_inner, comarks, translate, AffineWeight};
pub use compare::Comparison;
pub use denominator::{
    delta_exps, denominator, divide_by_denominator, embed_q, extract_q, mul_q,
    multiply_by_denominator, q_power,
};
pub use exp_series::{height, ExpSeries, Exps};
pub use json::{from_json, to_json, to_pretty, to_tsv};
pub use lattice::{alt_weyl_sum, apply_weyl, LatticeSum, LATTICE_BOX_LIMIT};
pub use qseries::QSeries;
pub use superdenominator::{
    embed_sl_in_super, embed_sp_in_super, flip_super, spo_delta, spo_odd_positive_roots,
    super_rho_hat, super_rho_hat_spo, superdenominator_sl, superdenominator_spo,
};
