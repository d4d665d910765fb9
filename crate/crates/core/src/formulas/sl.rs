//! Characters of affine `sl_n` modules.

use num_traits::Zero;

use super::Side;
use crate::error::{Error, Result};
use crate::lie::{RootSystem, RootType};
use crate::linalg::Q;
use crate::series::{AffineWeight, ExpSeries, LatticeSum};

/// Weyl–Kac numerator `R_hat ch L(Lambda)` of an integrable module.
pub fn weyl_kac(rs: &RootSystem, lambda: &AffineWeight, order: u32) -> Result<ExpSeries> {
    for (i, m) in lambda.labels(rs).iter().enumerate() {
        if !m.is_integer() || *m < Q::zero() {
            return Err(Error::Precondition(format!(
                "the Weyl-Kac formula needs a dominant integral weight; label m_{i} = {m}"
            )));
        }
    }
    weyl_kac_sum(rs, lambda).eval(order)
}

/// The unevaluated Weyl–Kac lattice sum (no dominance check).
pub fn weyl_kac_sum<'a>(rs: &'a RootSystem, lambda: &AffineWeight) -> LatticeSum<'a> {
    LatticeSum::new(rs, lambda + &AffineWeight::rho_hat(rs))
}

/// The level -1 weight `-(1+s) Lambda_0 + s Lambda_{n-1}` (`Side::Last`) or
/// `-(1+s) Lambda_0 + s Lambda_1` (`Side::First`) of affine `sl_n`.
pub fn level_minus_one_weight(rs: &RootSystem, s: u32, side: Side) -> Result<AffineWeight> {
    let l = rs.rank();
    let mut labels = vec![0i64; l + 1];
    labels[0] = -(1 + s as i64);
    match side {
        Side::First => labels[1] += s as i64,
        Side::Last => labels[l] += s as i64,
    }
    AffineWeight::from_labels(rs, &labels, Q::zero())
}

/// Numerator `R_hat ch L(Lambda)` for `Lambda = -(1+s) Lambda_0 + s Lambda_{n-1}`
/// (resp. `s Lambda_1`): the alternating sum over translations by root
/// lattice vectors `gamma` with `(gamma | Lambda_bar_{n-1}) >= 0` (resp.
/// `(gamma | Lambda_bar_1) >= 0`).
pub fn sl_half_lattice(n: usize, s: u32, side: Side, order: u32) -> Result<ExpSeries> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "the half-lattice formula for affine sl_n requires n >= 3, got n = {n}"
        )));
    }
    let rs = RootSystem::new(RootType::A, n - 1)?;
    half_lattice_sum(&rs, s, side)?.eval(order)
}

/// The unevaluated half-lattice sum behind [`sl_half_lattice`] on `A_{n-1}`.
pub fn half_lattice_sum(rs: &RootSystem, s: u32, side: Side) -> Result<LatticeSum<'_>> {
    let lambda = level_minus_one_weight(rs, s, side)?;
    let source = &lambda + &AffineWeight::rho_hat(rs);
    // In the simple coroot basis, (gamma | Lambda_bar_i) is the i-th coordinate.
    let idx = match side {
        Side::First => 0,
        Side::Last => rs.rank() - 1,
    };
    Ok(LatticeSum::new(rs, source).filter(move |j, _| j[idx] >= 0))
}

/// Numerator for affine `sl_2` at `Lambda = -(1+s) Lambda_0 + s Lambda_1`,
/// where only the finite Weyl group contributes: `e^{Lambda + rho_hat}(1 - e^{-(s+1) alpha_1})`.
pub fn sl2_two_term(s: u32, order: u32) -> Result<ExpSeries> {
    let rs = RootSystem::new(RootType::A, 1)?;
    two_term_sum(&rs, s)?.eval(order)
}

/// The unevaluated sum behind [`sl2_two_term`]: only `gamma = 0`.
pub fn two_term_sum(rs: &RootSystem, s: u32) -> Result<LatticeSum<'_>> {
    let lambda = level_minus_one_weight(rs, s, Side::First)?;
    let source = &lambda + &AffineWeight::rho_hat(rs);
    Ok(LatticeSum::new(rs, source).filter(|j, _| j[0] == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::divide_by_denominator;
    use num_bigint::BigInt;

    #[test]
    fn sl2_closed_form_has_two_terms() {
        for s in 0..4u32 {
            let num = sl2_two_term(s, s + 3).unwrap();
            assert_eq!(num.len(), 2);
            assert_eq!(num.coeff(&[0, 0]), BigInt::from(1));
            assert_eq!(num.coeff(&[0, s + 1]), BigInt::from(-1));
        }
    }

    #[test]
    fn weyl_kac_vacuum_of_a1() {
        let rs = RootSystem::new(RootType::A, 1).unwrap();
        let lambda = AffineWeight::lambda0(1);
        let ch = divide_by_denominator(&rs, &weyl_kac(&rs, &lambda, 4).unwrap()).unwrap();
        assert_eq!(ch.coeff(&[0, 0]), BigInt::from(1));
        // Lambda_0 - alpha_0 is a weight of multiplicity one (e_{-theta} t^{-1} v).
        assert_eq!(ch.coeff(&[1, 0]), BigInt::from(1));
        assert!(ch.terms().values().all(|c| c > &BigInt::from(0)));
        assert!(weyl_kac(&rs, &AffineWeight::lambda0(1).scale(Q::from_integer(-1)), 2).is_err());
    }

    #[test]
    fn small_n_is_rejected() {
        assert!(sl_half_lattice(2, 0, Side::Last, 2).is_err());
    }

    #[test]
    fn leading_coefficient_is_one() {
        let num = sl_half_lattice(3, 0, Side::Last, 0).unwrap();
        assert_eq!(num.len(), 1);
        assert_eq!(num.coeff(&[0, 0, 0]), BigInt::from(1));
    }

    #[test]
    fn the_two_sides_are_exchanged_by_the_diagram_flip() {
        for s in 0..3 {
            let first = sl_half_lattice(3, s, Side::First, 5).unwrap();
            let last = sl_half_lattice(3, s, Side::Last, 5).unwrap();
            let flipped = first.remap(3, last.base().clone(), 5, |e| vec![e[0], e[2], e[1]]);
            assert_eq!(flipped, last);
        }
    }
}
