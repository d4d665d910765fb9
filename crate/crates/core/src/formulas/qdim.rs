//! Homogeneous q-dimension `sum_j dim L(Lambda)_j q^j`, by three
//! independent routes.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::request::CharacterRequest;
use crate::error::{Error, Result};
use crate::lie::FiniteWeight;
use crate::linalg::{self, q, Q};
use crate::series::{LatticeSum, QSeries, LATTICE_BOX_LIMIT};

fn ceil_nonneg(x: Q) -> u32 {
    x.ceil().to_integer().max(0) as u32
}

fn divide_out(acc: QSeries, divisor: i64, dim_g: u32) -> Result<QSeries> {
    let acc = acc.div_exact(divisor)?;
    let phi = QSeries::phi(acc.order());
    Ok(acc.mul(&phi.pow(dim_g).invert()?))
}

/// Sums `c(gamma) dim(Lambda_bar + kappa gamma) q^{kappa |gamma|^2 / 2 + (Lambda_bar + rho | gamma)}`
/// over the lattice points directly, then divides by `phi(q)^{dim g}`.
pub fn q_dimension_direct(req: &CharacterRequest, order: u32) -> Result<QSeries> {
    let rs = req.root_system()?;
    let (sum, divisor) = req.lattice(&rs)?;
    let acc = direct_sum(&sum, order)?;
    divide_out(acc, divisor, rs.dim() as u32)
}

/// The numerator of the q-dimension, `phi(q)^{dim g} dim_q L` times the
/// divisor of the lattice sum.
pub fn direct_sum(sum: &LatticeSum<'_>, order: u32) -> Result<QSeries> {
    let rs = sum.root_system();
    let source = sum.source();
    let kappa = source.level;
    if !kappa.is_positive() {
        return Err(Error::NonPositiveShiftedLevel(kappa.to_string()));
    }
    let mu0 = &source.fin;
    let lambda_bar = mu0 - rs.rho();
    let basis = sum.basis_vectors();
    let l = basis.len();
    let gram: Vec<Vec<Q>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| rs.inner(a, b)).collect())
        .collect();
    let inv = linalg::inverse(&gram)
        .ok_or_else(|| Error::Precondition("degenerate lattice basis".into()))?;
    // degree(gamma) = kappa/2 |gamma + mu0/kappa|^2 - |mu0|^2/(2 kappa), so
    // the gammas of degree <= order lie in a ball around -mu0/kappa.
    let pair: Vec<Q> = basis.iter().map(|b| rs.inner(mu0, b)).collect();
    let center = linalg::mat_vec(&inv, &pair.iter().map(|x| -*x / kappa).collect::<Vec<_>>());
    let r2 = (q(2) * q(order as i64) / kappa + rs.norm_sq(mu0) / (kappa * kappa))
        .to_f64()
        .unwrap_or(0.0);
    let mut lo = vec![0i64; l];
    let mut hi = vec![0i64; l];
    let mut volume: u64 = 1;
    for i in 0..l {
        let c = center[i].to_f64().unwrap_or(0.0);
        let w = (r2 * inv[i][i].to_f64().unwrap_or(0.0)).max(0.0).sqrt();
        lo[i] = (c - w).floor() as i64 - 1;
        hi[i] = (c + w).ceil() as i64 + 1;
        volume = volume.saturating_mul((hi[i] - lo[i] + 1) as u64);
    }
    if volume > LATTICE_BOX_LIMIT {
        return Err(Error::BudgetExceeded(volume));
    }
    let mut acc = QSeries::zero(order);
    let mut j = lo.clone();
    loop {
        if let Some((gamma, c)) = sum.coefficient_at(&j) {
            let degree = kappa * rs.norm_sq(&gamma) / q(2) + rs.inner(mu0, &gamma);
            if degree <= q(order as i64) && c != 0 {
                if !degree.is_integer() || degree.is_negative() {
                    return Err(Error::Precondition(format!(
                        "lattice point {gamma} has degree {degree}"
                    )));
                }
                let dim = rs.weyl_dim(&(&lambda_bar + &gamma.scale(kappa)));
                debug_assert!(dim.is_integer());
                acc.add_at(
                    degree.to_integer() as u32,
                    &(BigInt::from(c) * BigInt::from(dim.to_integer())),
                );
            }
        }
        let mut i = 0;
        loop {
            if i == l {
                return Ok(acc);
            }
            if j[i] < hi[i] {
                j[i] += 1;
                break;
            }
            j[i] = lo[i];
            i += 1;
        }
    }
}

/// Evaluates the numerator as a series, keeps the terms whose finite part is
/// regular dominant and weights each by the Weyl dimension of its orbit.
pub fn q_dimension_specialized(req: &CharacterRequest, order: u32) -> Result<QSeries> {
    let rs = req.root_system()?;
    let (sum, divisor) = req.lattice(&rs)?;
    let lambda_bar = &sum.source().fin - rs.rho();
    // The dominant term at q-degree j sits at height at most j h + ht(Lambda_bar).
    let height = order * rs.coxeter() as u32 + ceil_nonneg(rs.height(&lambda_bar));
    let num = sum.eval(height)?;
    let base = num.base().fin.clone();
    let theta = rs.theta().clone();
    let mut acc = QSeries::zero(order);
    for (e, c) in num.terms() {
        if e[0] > order {
            continue;
        }
        let mut mu: FiniteWeight = &base + &theta.scale(q(e[0] as i64));
        for (i, k) in e[1..].iter().enumerate() {
            mu = &mu - &rs.simple_root(i).scale(q(*k as i64));
        }
        if mu.coords().iter().all(|m| m.is_positive()) {
            let dim = rs.weyl_dim(&(&mu - rs.rho()));
            acc.add_at(e[0], &(c * BigInt::from(dim.to_integer())));
        }
    }
    divide_out(acc, divisor, rs.dim() as u32)
}

/// Sums the coefficients of the full character grade by grade. The height is
/// large enough to hold every weight of the first `order + 1` grades: each
/// grade is a finite-dimensional module with weights between
/// `w_0(Lambda_bar + j theta)` and `Lambda_bar + j theta`.
pub fn q_dimension_graded(req: &CharacterRequest, order: u32) -> Result<QSeries> {
    let rs = req.root_system()?;
    let lambda_bar = req.weight(&rs)?.fin;
    let (neg_low, _) = rs.to_dominant(&-&lambda_bar);
    let spread = rs.height(&lambda_bar) + rs.height(&neg_low);
    let height = order * (2 * rs.coxeter() as u32 - 1) + ceil_nonneg(spread);
    let ch = req.character(height)?;
    let mut out = QSeries::zero(order);
    for (j, c) in ch.grade_sums() {
        out.add_at(j, &c);
    }
    Ok(out)
}

/// The height a graded q-dimension to `order` needs; useful to decide
/// whether [`q_dimension_graded`] is affordable.
pub fn graded_height(req: &CharacterRequest, order: u32) -> Result<u32> {
    let rs = req.root_system()?;
    let lambda_bar = req.weight(&rs)?.fin;
    let (neg_low, _) = rs.to_dominant(&-&lambda_bar);
    let spread = rs.height(&lambda_bar) + rs.height(&neg_low);
    Ok(order * (2 * rs.coxeter() as u32 - 1) + ceil_nonneg(spread))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::FormulaId;
    use crate::lie::RootType;

    #[test]
    fn sl3_vacuum_three_ways() {
        let req = CharacterRequest::new(FormulaId::SlHalfFirst, RootType::A, 2);
        let a = q_dimension_direct(&req, 3).unwrap();
        let b = q_dimension_specialized(&req, 3).unwrap();
        let c = q_dimension_graded(&req, 3).unwrap();
        assert_eq!(a.coeff(0), BigInt::from(1));
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn integrable_a1_vacuum() {
        // L(Lambda_0) of affine sl_2: 1 + 3q + 4q^2 + 7q^3 + ...
        let req = CharacterRequest::new(FormulaId::WeylKac, RootType::A, 1).with_labels(vec![1, 0]);
        let a = q_dimension_direct(&req, 3).unwrap();
        assert_eq!(a, q_dimension_graded(&req, 3).unwrap());
        assert_eq!(a, QSeries::from_i64(&[1, 3, 4, 7]));
    }
}
