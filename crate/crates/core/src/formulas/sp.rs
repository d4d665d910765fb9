//! Characters of level -1 modules over affine `sp_n`, `n = 2 n'`, built
//! from lattice sums over the coroot lattice written in the basis
//! `gamma_i = alpha_i^vee + ... + alpha_{n'}^vee`, where
//! `(gamma | Lambda_bar_1) = j_1`, `(gamma | Lambda_bar_2 - Lambda_bar_1) = j_2`
//! and `(gamma | Lambda_bar_{n'}) = j_1 + ... + j_{n'}`.

use std::collections::HashSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{RootSystem, RootType};
use crate::linalg::Q;
use crate::series::{
    divide_by_denominator, multiply_by_denominator, AffineWeight, Comparison, ExpSeries,
    LatticeSum, QSeries,
};

/// Variants of the level -1 `sp_n` character formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpVariant {
    /// `Lambda = -(1+s) Lambda_0 + s Lambda_1`, `s >= 1`.
    Lambda1,
    /// `Lambda = -Lambda_0`.
    Vacuum,
    /// `Lambda = -2 Lambda_0 + Lambda_2`.
    Lambda2,
}

/// The root system `C_{n/2}`; `n` must be even and at least 4.
pub fn sp_system(n: usize) -> Result<RootSystem> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "affine sp_n formulas need even n >= 4, got n = {n}"
        )));
    }
    RootSystem::new(RootType::C, n / 2)
}

fn weight(rs: &RootSystem, labels: &[(usize, i64)]) -> Result<AffineWeight> {
    let mut l = vec![0i64; rs.rank() + 1];
    for &(i, m) in labels {
        l[i] += m;
    }
    AffineWeight::from_labels(rs, &l, Q::zero())
}

/// `-Lambda_0 + rho_hat = n' Lambda_0 + rho`.
pub fn vacuum_source(rs: &RootSystem) -> Result<AffineWeight> {
    Ok(&weight(rs, &[(0, -1)])? + &AffineWeight::rho_hat(rs))
}

/// `[condition on gamma]`: the alternating sum of translates of `source`
/// over the gammas (given by their gamma-basis coordinates) passing `filter`.
pub fn bracket<F>(rs: &RootSystem, source: AffineWeight, filter: F, order: u32) -> Result<ExpSeries>
where
    F: Fn(&[i64]) -> bool + Send + Sync + 'static,
{
    bracket_sum(rs, source, filter)?.eval(order)
}

/// The unevaluated form of [`bracket`].
pub fn bracket_sum<F>(rs: &RootSystem, source: AffineWeight, filter: F) -> Result<LatticeSum<'_>>
where
    F: Fn(&[i64]) -> bool + Send + Sync + 'static,
{
    Ok(LatticeSum::new(rs, source)
        .basis(rs.gamma_basis()?)
        .filter(move |j, _| filter(j)))
}

/// The unevaluated numerator of `L(-(1+s) Lambda_0 + s Lambda_1)`, `s >= 1`:
/// the bracket `[(gamma | Lambda_bar_1) >= 0]`.
pub fn restricted_sum(rs: &RootSystem, s: u32) -> Result<LatticeSum<'_>> {
    if s == 0 {
        return Err(Error::Precondition(
            "the restriction formula for -(1+s)Lambda_0 + s Lambda_1 needs s >= 1".into(),
        ));
    }
    let lambda = weight(rs, &[(0, -(1 + s as i64)), (1, s as i64)])?;
    bracket_sum(rs, &lambda + &AffineWeight::rho_hat(rs), |j| j[0] >= 0)
}

/// The unevaluated parity-restricted numerator.
pub fn parity_sum(rs: &RootSystem, variant: SpParityVariant) -> Result<LatticeSum<'_>> {
    match variant {
        SpParityVariant::Vacuum => {
            bracket_sum(rs, vacuum_source(rs)?, |j| j[0] >= 0 && even_sum(j))
        }
        SpParityVariant::Lambda2 => {
            let lambda = weight(rs, &[(0, -2), (2, 1)])?;
            bracket_sum(rs, &lambda + &AffineWeight::rho_hat(rs), |j| {
                j[1] >= 0 && even_sum(j)
            })
        }
    }
}

fn even_sum(j: &[i64]) -> bool {
    j.iter().sum::<i64>() % 2 == 0
}

/// `e^{-Lambda_0} (phi(q^2)/phi(q)) prod_{alpha long} prod_{k odd} (1 - e^alpha q^k)^{-1}`,
/// with base `-Lambda_0`.
pub fn long_root_product(rs: &RootSystem, order: u32) -> Result<ExpSeries> {
    let nv = rs.rank() + 1;
    let base = weight(rs, &[(0, -1)])?;
    let d = crate::series::delta_exps(rs);
    let dh: u32 = d.iter().sum();
    let qn = order / dh;
    let ratio = QSeries::phi_step(2, qn).mul(&QSeries::phi(qn).invert()?);
    let mut s = crate::series::embed_q(rs, &ratio, base, order);
    let longs: Vec<Vec<i64>> = rs
        .long_roots()
        .iter()
        .map(|a| rs.root_coords(a))
        .collect::<Result<_>>()?;
    let mut k = 1;
    while k <= qn + 1 {
        for a in &longs {
            // e^{alpha} q^k = e^{-(k delta - alpha)}
            let neg: Vec<i64> = a.iter().map(|c| -c).collect();
            if let Some(e) = crate::series::denominator::affine_root_exps(rs, &neg, k) {
                if e.iter().sum::<u32>() <= order {
                    s = s.mul_binomial(&e, -1);
                }
            }
        }
        k += 2;
    }
    debug_assert_eq!(s.nvars(), nv);
    Ok(s)
}

/// The character (not the numerator) of the module selected by `variant`.
pub fn sp_character(n: usize, variant: SpVariant, s: u32, order: u32) -> Result<ExpSeries> {
    let rs = sp_system(n)?;
    match variant {
        SpVariant::Lambda1 => {
            let num = restricted_sum(&rs, s)?.eval(order)?;
            divide_by_denominator(&rs, &num)
        }
        SpVariant::Vacuum | SpVariant::Lambda2 => {
            if s != 0 {
                return Err(Error::Precondition(format!(
                    "variant {variant:?} has no parameter s (got s = {s})"
                )));
            }
            let ext = if variant == SpVariant::Lambda2 {
                order + 2
            } else {
                order
            };
            let num = bracket(&rs, vacuum_source(&rs)?, |j| j[0] >= 0, ext)?;
            let first = divide_by_denominator(&rs, &num)?;
            let second = long_root_product(&rs, ext)?;
            if variant == SpVariant::Vacuum {
                return first.add(&second)?.div_exact(2);
            }
            // Divide by q and move to the base -Lambda_0 + Lambda_bar_2, which
            // sits at delta - Lambda_bar_2 = alpha_0 + alpha_1 below -Lambda_0 + delta.
            let diff = first.sub(&second)?;
            let mut offset = vec![0i64; rs.rank() + 1];
            offset[0] = -1;
            offset[1] = -1;
            let base = weight(&rs, &[(0, -2), (2, 1)])?;
            diff.rebase(&offset, base)?.div_exact(2)
        }
    }
}

/// Variants of the parity-restricted numerator formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpParityVariant {
    /// `R_hat ch L(-Lambda_0)`: `j_1 >= 0`, `sum j` even.
    Vacuum,
    /// `R_hat ch L(-2 Lambda_0 + Lambda_2)`: `j_2 >= 0`, `sum j` even.
    Lambda2,
}

pub fn sp_parity_numerator(n: usize, variant: SpParityVariant, order: u32) -> Result<ExpSeries> {
    let rs = sp_system(n)?;
    parity_sum(&rs, variant)?.eval(order)
}

/// `R_hat` times `sp_character` against `sp_parity_numerator` for the same module.
pub fn sp_parity_rewriting_check(
    n: usize,
    variant: SpParityVariant,
    order: u32,
) -> Result<Comparison> {
    let rs = sp_system(n)?;
    let ch = match variant {
        SpParityVariant::Vacuum => sp_character(n, SpVariant::Vacuum, 0, order)?,
        SpParityVariant::Lambda2 => sp_character(n, SpVariant::Lambda2, 0, order)?,
    };
    let lhs = multiply_by_denominator(&rs, &ch)?;
    let rhs = sp_parity_numerator(n, variant, order)?;
    Ok(Comparison::of(&lhs, &rhs))
}

/// Twisted denominator identity: `R_hat` times the long-root product equals
/// the alternating sum over the even-parity sublattice `M`.
pub fn twisted_denominator_check(n_prime: usize, order: u32) -> Result<Comparison> {
    let rs = sp_system(2 * n_prime)?;
    let lhs = multiply_by_denominator(&rs, &long_root_product(&rs, order)?)?;
    let rhs = bracket(&rs, vacuum_source(&rs)?, even_sum, order)?;
    Ok(Comparison::of(&lhs, &rhs))
}

/// The reflection `(j_1, j_2, ...) -> (-j_1 - 1, j_2, ...)` of gamma-basis
/// coordinates.
pub fn omega_prime(j: &[i64]) -> Vec<i64> {
    let mut out = j.to_vec();
    out[0] = -out[0] - 1;
    out
}

/// The sum over a finite set `omega` of gamma-coordinates equals minus the
/// sum over its image under `omega_prime`.
pub fn omega_reflection_check(
    n_prime: usize,
    omega: &[Vec<i64>],
    order: u32,
) -> Result<Comparison> {
    let rs = sp_system(2 * n_prime)?;
    for j in omega {
        if j.len() != n_prime {
            return Err(Error::DimensionMismatch {
                expected: n_prime,
                got: j.len(),
            });
        }
    }
    let set: HashSet<Vec<i64>> = omega.iter().cloned().collect();
    let image: HashSet<Vec<i64>> = omega.iter().map(|j| omega_prime(j)).collect();
    let source = vacuum_source(&rs)?;
    let lhs = bracket(&rs, source.clone(), move |j| set.contains(j), order)?;
    let rhs = bracket(&rs, source, move |j| image.contains(j), order)?;
    Ok(Comparison::of(&lhs, &rhs.neg()))
}

/// `[j_1 >= 0, sum j odd] = -[j_1 < 0, sum j even]`.
pub fn bracket_complement_check(n_prime: usize, order: u32) -> Result<Comparison> {
    let rs = sp_system(2 * n_prime)?;
    let source = vacuum_source(&rs)?;
    let lhs = bracket(&rs, source.clone(), |j| j[0] >= 0 && !even_sum(j), order)?;
    let rhs = bracket(&rs, source, |j| j[0] < 0 && even_sum(j), order)?;
    Ok(Comparison::of(&lhs, &rhs.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rejects_odd_or_small_n() {
        assert!(sp_system(5).is_err());
        assert!(sp_system(2).is_err());
        assert!(sp_character(4, SpVariant::Lambda1, 0, 2).is_err());
    }

    #[test]
    fn vacuum_character_starts_with_one() {
        let ch = sp_character(4, SpVariant::Vacuum, 0, 0).unwrap();
        assert_eq!(ch.coeff(&[0, 0, 0]), BigInt::from(1));
    }

    #[test]
    fn twisted_denominator_identity_small() {
        assert!(twisted_denominator_check(2, 4).unwrap().holds());
        assert!(twisted_denominator_check(3, 3).unwrap().holds());
    }

    #[test]
    fn reflection_of_gamma_coordinates() {
        assert!(omega_reflection_check(2, &[vec![0, 0]], 3).unwrap().holds());
        assert!(omega_reflection_check(2, &[], 3).unwrap().holds());
        // A set closed under the reflection sums to zero.
        let omega = vec![vec![0, 1], vec![-1, 1], vec![2, 0], vec![-3, 0]];
        let rs = sp_system(4).unwrap();
        let set: HashSet<Vec<i64>> = omega.iter().cloned().collect();
        let s = bracket(
            &rs,
            vacuum_source(&rs).unwrap(),
            move |j| set.contains(j),
            6,
        )
        .unwrap();
        assert!(s.is_empty());
        assert!(omega_reflection_check(2, &omega, 6).unwrap().holds());
    }

    #[test]
    fn parity_bracket_identity() {
        assert!(bracket_complement_check(2, 4).unwrap().holds());
    }

    #[test]
    fn parity_filter_includes_gamma1_plus_gamma2() {
        assert!(even_sum(&[1, 1]));
    }
}
