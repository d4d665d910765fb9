use super::affine::AffineWeight;
use super::exp_series::{ExpSeries, Exps};
use super::qseries::QSeries;
use crate::error::{Error, Result};
use crate::lie::RootSystem;

/// Exponents of `delta = alpha_0 + theta`.
pub fn delta_exps(rs: &RootSystem) -> Exps {
    let theta = rs
        .root_coords(rs.theta())
        .expect("highest root lies in the root lattice");
    std::iter::once(1)
        .chain(theta.into_iter().map(|c| c as u32))
        .collect()
}

/// Exponents of the positive affine root `beta + m delta`, where `beta` is a
/// finite root given in simple-root coordinates. `None` if it is not a
/// positive affine root.
pub fn affine_root_exps(rs: &RootSystem, beta: &[i64], m: u32) -> Option<Exps> {
    let theta = rs.root_coords(rs.theta()).ok()?;
    let mut out = vec![m];
    for (b, t) in beta.iter().zip(&theta) {
        let c = b + m as i64 * t;
        if c < 0 {
            return None;
        }
        out.push(c as u32);
    }
    if out.iter().all(|&c| c == 0) {
        return None;
    }
    Some(out)
}

/// The affine Weyl denominator `prod (1 - e^{-alpha})^{mult alpha}` over
/// positive affine roots, as a series with base `rho_hat` (so it represents
/// `R_hat` itself, the `e^{rho_hat}` prefactor being carried by the base).
pub fn denominator(rs: &RootSystem, order: u32) -> ExpSeries {
    let nvars = rs.rank() + 1;
    let mut s = ExpSeries::one(AffineWeight::rho_hat(rs), nvars, order);
    let d = delta_exps(rs);
    let dh: u32 = d.iter().sum();
    for m in 0..=order {
        for beta in rs.positive_root_coords() {
            if let Some(e) = affine_root_exps(rs, beta, m) {
                if e.iter().sum::<u32>() <= order {
                    s = s.mul_binomial(&e, 1);
                }
            }
            if m > 0 {
                let neg: Vec<i64> = beta.iter().map(|c| -c).collect();
                if let Some(e) = affine_root_exps(rs, &neg, m) {
                    if e.iter().sum::<u32>() <= order {
                        s = s.mul_binomial(&e, 1);
                    }
                }
            }
        }
        if m > 0 && m * dh <= order {
            let e: Exps = d.iter().map(|c| c * m).collect();
            s = s.mul_binomial(&e, rs.rank() as i32);
        }
    }
    s
}

/// `ch = numerator / R_hat`. The base of the result is `numerator.base - rho_hat`.
pub fn divide_by_denominator(rs: &RootSystem, numerator: &ExpSeries) -> Result<ExpSeries> {
    let inv = denominator(rs, numerator.order()).invert()?;
    numerator.mul(&inv)
}

/// `R_hat * ch`.
pub fn multiply_by_denominator(rs: &RootSystem, ch: &ExpSeries) -> Result<ExpSeries> {
    denominator(rs, ch.order()).mul(ch)
}

/// Embeds a q-series (`q = e^{-delta}`) as an exponential series with the
/// given base; degrees beyond the order are dropped.
pub fn embed_q(rs: &RootSystem, qs: &QSeries, base: AffineWeight, order: u32) -> ExpSeries {
    let d = delta_exps(rs);
    let mut out = ExpSeries::zero(base, rs.rank() + 1, order);
    for (j, c) in qs.coeffs().iter().enumerate() {
        let e: Exps = d.iter().map(|x| x * j as u32).collect();
        out.add_term(e, c.clone());
    }
    out
}

/// Multiplies by a q-series, keeping the base.
pub fn mul_q(rs: &RootSystem, s: &ExpSeries, qs: &QSeries) -> Result<ExpSeries> {
    let zero = AffineWeight::zero(rs.rank());
    embed_q(rs, qs, zero, s.order()).mul(s)
}

/// The coefficient list of `q^j` in a series all of whose terms are pure
/// powers of `q` (as produced by `embed_q`).
pub fn extract_q(rs: &RootSystem, s: &ExpSeries) -> Result<QSeries> {
    let d = delta_exps(rs);
    let dh: u32 = d.iter().sum();
    let mut out = QSeries::zero(s.order() / dh);
    for (e, c) in s.terms() {
        let j = e[0];
        let expect: Exps = d.iter().map(|x| x * j).collect();
        if *e != expect {
            return Err(Error::Precondition(format!(
                "term {e:?} is not a pure power of q"
            )));
        }
        out.add_at(j, c);
    }
    Ok(out)
}

/// Exponents of `q^j` in a rank-`l` affine system.
pub fn q_power(rs: &RootSystem, j: u32) -> Exps {
    delta_exps(rs).into_iter().map(|x| x * j).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootType;
    use num_bigint::BigInt;

    #[test]
    fn a1_denominator_matches_direct_product() {
        let rs = RootSystem::new(RootType::A, 1).unwrap();
        let n = 4;
        let r = denominator(&rs, n);
        // Direct product in variables x0 = e^{-alpha_0}, x1 = e^{-alpha_1}:
        // (1-x1) prod_{m>=1} (1-x0^m x1^m)(1-x0^m x1^{m+1})(1-x0^m x1^{m-1}).
        let base = AffineWeight::rho_hat(&rs);
        let mut direct = ExpSeries::one(base, 2, n).mul_binomial(&[0, 1], 1);
        for m in 1..=n {
            for e in [[m, m], [m, m + 1], [m, m - 1]] {
                if e[0] + e[1] <= n {
                    direct = direct.mul_binomial(&e, 1);
                }
            }
        }
        assert_eq!(r, direct);
        assert_eq!(r.coeff(&[0, 0]), BigInt::from(1));
    }

    #[test]
    fn inverse_denominator_multiplies_back_to_one() {
        let rs = RootSystem::new(RootType::A, 1).unwrap();
        let r = denominator(&rs, 3);
        let prod = r.mul(&r.invert().unwrap()).unwrap();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.coeff(&[0, 0]), BigInt::from(1));
    }

    #[test]
    fn a2_denominator_matches_naive_factor_list() {
        // Imaginary root delta = (1,1,1) appears with multiplicity rank = 2.
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let r = denominator(&rs, 3);
        // Brute force: expand the product of all factors of height <= 3 naively.
        let mut factors: Vec<Exps> = Vec::new();
        for m in 0..=3u32 {
            for beta in rs.positive_root_coords() {
                factors.extend(affine_root_exps(&rs, beta, m));
                if m > 0 {
                    let neg: Vec<i64> = beta.iter().map(|c| -c).collect();
                    factors.extend(affine_root_exps(&rs, &neg, m));
                }
            }
        }
        factors.retain(|e| e.iter().sum::<u32>() <= 3);
        factors.push(vec![1, 1, 1]);
        factors.push(vec![1, 1, 1]);
        let mut direct = ExpSeries::one(AffineWeight::rho_hat(&rs), 3, 3);
        for f in &factors {
            direct = direct.mul_binomial(f, 1);
        }
        assert_eq!(r, direct);
    }

    #[test]
    fn q_embedding_round_trips() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let phi = QSeries::phi(3);
        let s = embed_q(&rs, &phi, AffineWeight::zero(2), 9);
        assert_eq!(extract_q(&rs, &s).unwrap(), phi);
    }
}
