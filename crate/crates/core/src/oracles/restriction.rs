//! Characters of `sl_n` and `sp_n` modules read off from the Fock space.

use num_traits::Zero;

use super::fock::{fock_brute_force, FockCharacter};
use crate::error::{Error, Result};
use crate::formulas::{level_minus_one_weight, Side};
use crate::lie::{RootSystem, RootType};
use crate::linalg::Q;
use crate::series::{mul_q, AffineWeight, ExpSeries, QSeries};

/// Rewrites a charge-`s` Fock slice (`n` colors) as a series over affine
/// `sl_n` with base `-Lambda_0 + s Lambda_bar_1` (`s >= 0`) or
/// `-Lambda_0 - s Lambda_bar_{n-1}` (`s < 0`): the weight `e^{eps-weight}`
/// loses its trace part and the energy is shifted by `|s|/2`.
pub fn fock_to_sl(rs: &RootSystem, fc: &FockCharacter, s: i64, order: u32) -> Result<ExpSeries> {
    let n = rs.rank() + 1;
    if fc.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: fc.n,
        });
    }
    let t = s.unsigned_abs() as u32;
    let side = if s >= 0 { Side::First } else { Side::Last };
    let base = level_minus_one_weight(rs, t, side)?;
    let mut out = ExpSeries::zero(base, n, order);
    for ((charge, e2, w), c) in &fc.terms {
        if *charge != s {
            continue;
        }
        let k0 = (*e2 as i64 - t as i64) / 2;
        debug_assert_eq!((*e2 as i64 - t as i64) % 2, 0);
        // x = top - w + k0 (eps_1 - eps_n), top = s eps_1 or s eps_n
        let mut x: Vec<i64> = w.iter().map(|v| -v).collect();
        if s >= 0 {
            x[0] += s;
        } else {
            x[n - 1] += s;
        }
        x[0] += k0;
        x[n - 1] -= k0;
        let mut exps = vec![k0];
        let mut partial = 0;
        for v in x.iter().take(n - 1) {
            partial += v;
            exps.push(partial);
        }
        if exps.iter().sum::<i64>() > order as i64 {
            continue;
        }
        if exps.iter().any(|&k| k < 0) {
            return Err(Error::OutsideCone(exps));
        }
        out.add_term(exps.into_iter().map(|k| k as u32).collect(), c.clone());
    }
    Ok(out)
}

/// `ch L(-(1+s) Lambda_0 + s Lambda_1)` (`Side::First`) or its mirror
/// (`Side::Last`) as `phi(q) ch F_{+-s}`, from the enumerated Fock space.
pub fn fock_sl_oracle(n: usize, s: u32, side: Side, order: u32) -> Result<ExpSeries> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "the Fock space realizes irreducible sl_n modules only for n >= 3, got n = {n}"
        )));
    }
    let rs = RootSystem::new(RootType::A, n - 1)?;
    let charge = match side {
        Side::First => s as i64,
        Side::Last => -(s as i64),
    };
    let fc = fock_brute_force(n, charge, 2 * order + s)?;
    let series = fock_to_sl(&rs, &fc, charge, order)?;
    mul_q(&rs, &series, &QSeries::phi(order)).map(|x| x.with_base(series.base().clone()))
}

/// Folds a `gl_n` weight to `sp_n` (`n = 2 n'`): `u_i = w_i - w_{n+1-i}`.
pub fn fold_weight(w: &[i64]) -> Vec<i64> {
    let n = w.len();
    (0..n / 2).map(|i| w[i] - w[n - 1 - i]).collect()
}

/// Exponents over affine `sp_n` of the monomial `e^{top - ...}` with folded
/// weight `u`, relative to a base with finite part `s eps_1`, energy offset
/// `k0`.
pub fn sp_exps(u: &[i64], s: i64, k0: i64) -> Result<Vec<i64>> {
    let np = u.len();
    let mut x: Vec<i64> = u.iter().map(|v| -v).collect();
    x[0] += s + 2 * k0;
    let mut exps = vec![k0];
    let mut partial = 0;
    for v in x.iter().take(np - 1) {
        partial += v;
        exps.push(partial);
    }
    let total: i64 = x.iter().sum();
    if total % 2 != 0 {
        return Err(Error::NotInRootLattice(format!("{u:?}")));
    }
    exps.push(total / 2);
    Ok(exps)
}

/// Restricts a charge-`s` (`s >= 0`) Fock slice to affine `sp_n`, as a series
/// with base `-(1+s) Lambda_0 + s Lambda_1`.
pub fn fock_to_sp(rs: &RootSystem, fc: &FockCharacter, s: i64, order: u32) -> Result<ExpSeries> {
    let np = rs.rank();
    if fc.n != 2 * np || s < 0 {
        return Err(Error::Precondition(format!(
            "restriction to sp_{} needs {} colors and nonnegative charge",
            2 * np,
            2 * np
        )));
    }
    let mut labels = vec![0i64; np + 1];
    labels[0] = -(1 + s);
    labels[1] += s;
    let base = AffineWeight::from_labels(rs, &labels, Q::zero())?;
    let mut out = ExpSeries::zero(base, np + 1, order);
    for ((charge, e2, w), c) in &fc.terms {
        if *charge != s {
            continue;
        }
        let k0 = (*e2 as i64 - s) / 2;
        let exps = sp_exps(&fold_weight(w), s, k0)?;
        if exps.iter().sum::<i64>() > order as i64 {
            continue;
        }
        if exps.iter().any(|&k| k < 0) {
            return Err(Error::OutsideCone(exps));
        }
        out.add_term(exps.into_iter().map(|k| k as u32).collect(), c.clone());
    }
    Ok(out)
}

/// `phi(q) ch F_s` restricted to `sp_n`, `s >= 1`: the character of
/// `L(-(1+s) Lambda_0 + s Lambda_1)` over affine `sp_n`.
pub fn sp_restriction_oracle(n: usize, s: u32, order: u32) -> Result<ExpSeries> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "sp_n needs even n >= 4, got {n}"
        )));
    }
    let rs = RootSystem::new(RootType::C, n / 2)?;
    let fc = fock_brute_force(n, s as i64, 2 * order + s)?;
    let series = fock_to_sp(&rs, &fc, s as i64, order)?;
    mul_q(&rs, &series, &QSeries::phi(order)).map(|x| x.with_base(series.base().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::sl_half_lattice;
    use crate::oracles::fock::fock_char_product;
    use crate::series::divide_by_denominator;
    use num_bigint::BigInt;

    fn one() -> BigInt {
        BigInt::from(1)
    }

    #[test]
    fn half_lattice_formula_matches_fock_for_sl3() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        for s in 0..=2 {
            for side in [Side::First, Side::Last] {
                let num = sl_half_lattice(3, s, side, 4).unwrap();
                let ch = divide_by_denominator(&rs, &num).unwrap();
                let oracle = fock_sl_oracle(3, s, side, 4).unwrap();
                assert!(
                    ch.agrees_with(&oracle),
                    "s={s} {side:?}: {:?}",
                    ch.first_difference(&oracle)
                );
            }
        }
    }

    #[test]
    fn vacuum_module_has_unit_top() {
        let ch = fock_sl_oracle(3, 0, Side::First, 3).unwrap();
        assert_eq!(ch.coeff(&[0, 0, 0]), one());
        assert!(ch.terms().values().all(|c| c > &BigInt::zero()));
    }

    #[test]
    fn weights_lie_below_the_top() {
        // fock_to_sl errors on anything outside the cone
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let prod = fock_char_product(3, 9);
        for s in -2..=2 {
            assert!(fock_to_sl(&rs, &prod, s, 4).is_ok());
        }
    }

    #[test]
    fn folding_convention() {
        assert_eq!(fold_weight(&[1, 0, 0, -1]), vec![2, 0]);
        assert_eq!(fold_weight(&[0, 1, 0, 0]), vec![0, 1]);
    }
}
