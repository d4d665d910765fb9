//! Negative-level modules over simply laced affine algebras whose affine
//! Weyl stabilizer is generated by a single reflection `r_{delta - alpha}`,
//! and the half-sum character formula with coefficients `(alpha|gamma) + 1`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::{FiniteWeight, RootSystem};
use crate::linalg::{q, Q};
use crate::series::{AffineWeight, ExpSeries, LatticeSum};

fn violation(condition: &str, witness: String) -> Error {
    Error::ConditionViolation {
        condition: condition.to_string(),
        witness,
    }
}

/// Checks that `Lambda` (of negative integral level `k`) has nonnegative
/// integral finite labels ("dominant"), that some positive root `alpha` has
/// `(Lambda + rho_hat | delta - alpha) = 0` ("root"), and that `delta - alpha`
/// is the only positive affine root orthogonal to `Lambda + rho_hat`
/// ("unique"). Returns `alpha`.
pub fn check_stabilizer_conditions(rs: &RootSystem, lambda: &AffineWeight) -> Result<FiniteWeight> {
    if !rs.is_simply_laced() {
        return Err(Error::Precondition(format!(
            "{} is not simply laced",
            rs.label()
        )));
    }
    let k = lambda.level;
    if !k.is_integer() || !k.is_negative() {
        return Err(Error::Precondition(format!(
            "the level must be a negative integer, got {k}"
        )));
    }
    for (i, m) in lambda.fin.coords().iter().enumerate() {
        if !m.is_integer() || m.is_negative() {
            return Err(violation(
                "dominant",
                format!("(Lambda|alpha_{}) = {m}", i + 1),
            ));
        }
    }
    let kappa = k + q(rs.dual_coxeter());
    let shifted = &lambda.fin + rs.rho();
    let values: Vec<Q> = rs
        .positive_roots()
        .iter()
        .map(|a| rs.inner(&shifted, a))
        .collect();
    let hits: Vec<usize> = (0..values.len()).filter(|&i| values[i] == kappa).collect();
    let alpha_idx = match hits.as_slice() {
        [] => {
            return Err(violation(
                "root",
                format!(
                    "no positive root alpha with (Lambda_bar + rho | alpha) = k + h^vee = {kappa}"
                ),
            ))
        }
        [one] => *one,
        [a, b, ..] => {
            return Err(violation(
                "unique",
                format!(
                    "delta - {} and delta - {} are both orthogonal to Lambda + rho_hat",
                    rs.positive_roots()[*a],
                    rs.positive_roots()[*b]
                ),
            ))
        }
    };
    // A positive affine root orthogonal to Lambda + rho_hat is either a finite
    // root beta with (Lambda_bar + rho | beta) = 0 or m delta - beta with
    // (Lambda_bar + rho | beta) = m kappa, m >= 1.
    for (i, v) in values.iter().enumerate() {
        let beta = &rs.positive_roots()[i];
        if v.is_zero() {
            return Err(violation(
                "unique",
                format!("{beta} is orthogonal to Lambda + rho_hat"),
            ));
        }
        let ratio = *v / kappa;
        if ratio.is_integer() && ratio.is_positive() && i != alpha_idx {
            return Err(violation(
                "unique",
                format!("{}delta - {beta} is orthogonal to Lambda + rho_hat", ratio),
            ));
        }
    }
    Ok(rs.positive_roots()[alpha_idx].clone())
}

/// The number `b` of negative levels `-1, ..., -b` at which the
/// exceptional series has modules of this kind: 2, 3, 4, 6 for D4, E6, E7, E8.
/// Also used as the default bound on `(Lambda_bar | theta)` when listing.
pub fn deligne_window(rs: &RootSystem) -> Option<i64> {
    use crate::lie::RootType;
    match (rs.kind(), rs.rank()) {
        (RootType::D, 4) => Some(2),
        (RootType::E, 6) => Some(3),
        (RootType::E, 7) => Some(4),
        (RootType::E, 8) => Some(6),
        _ => None,
    }
}

/// A weight passing the conditions, with its root `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeligneWeight {
    pub lambda: AffineWeight,
    pub alpha: FiniteWeight,
}

/// All weights of level `k` with dominant integral finite part satisfying
/// `(Lambda_bar | theta) <= max_theta_pairing` that pass the conditions,
/// ordered by `(Lambda_bar | theta)` and then by labels.
pub fn list_deligne(rs: &RootSystem, k: i64, max_theta_pairing: i64) -> Result<Vec<DeligneWeight>> {
    if k >= 0 {
        return Err(Error::Precondition(format!(
            "the level must be negative, got {k}"
        )));
    }
    let l = rs.rank();
    let marks: Vec<i64> = rs
        .fundamental_weights()
        .iter()
        .map(|w| rs.inner(w, rs.theta()).to_integer())
        .collect();
    let mut out = Vec::new();
    let mut m = vec![0i64; l];
    loop {
        let pairing: i64 = m.iter().zip(&marks).map(|(a, b)| a * b).sum();
        if pairing <= max_theta_pairing {
            let lambda = AffineWeight::new(FiniteWeight::from_ints(&m), q(k), Q::zero());
            if let Ok(alpha) = check_stabilizer_conditions(rs, &lambda) {
                out.push((pairing, DeligneWeight { lambda, alpha }));
            }
        }
        // odometer over labels with pairing bounded
        let mut i = 0;
        loop {
            if i == l {
                out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.lambda.fin.cmp(&b.1.lambda.fin)));
                return Ok(out.into_iter().map(|x| x.1).collect());
            }
            m[i] += 1;
            let p: i64 = m.iter().zip(&marks).map(|(a, b)| a * b).sum();
            if p <= max_theta_pairing {
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

/// `c~(gamma) = (alpha | gamma) + 1`.
pub fn c_tilde(rs: &RootSystem, alpha: &FiniteWeight, gamma: &FiniteWeight) -> Q {
    rs.inner(alpha, gamma) + q(1)
}

/// The full sum `sum_w eps(w) w sum_gamma ((alpha|gamma) + 1) t_gamma(e^{Lambda + rho_hat})`
/// before halving.
pub fn deligne_doubled_sum(
    rs: &RootSystem,
    lambda: &AffineWeight,
    order: u32,
    allow_large_weyl: bool,
) -> Result<ExpSeries> {
    deligne_sum(rs, lambda)?
        .allow_large_weyl(allow_large_weyl)
        .eval(order)
}

/// The unevaluated doubled sum; the numerator is half of it.
pub fn deligne_sum<'a>(rs: &'a RootSystem, lambda: &AffineWeight) -> Result<LatticeSum<'a>> {
    let alpha = check_stabilizer_conditions(rs, lambda)?;
    let rs_c = rs.clone();
    Ok(LatticeSum::new(rs, lambda + &AffineWeight::rho_hat(rs))
        .coefficient(move |_, g| c_tilde(&rs_c, &alpha, g).to_integer()))
}

/// Numerator `R_hat ch L(Lambda)` by the half-sum formula. A coefficient the
/// halving does not divide is returned as `Error::NonIntegral`: such an
/// input contradicts the linearity hypothesis behind the formula.
pub fn deligne_numerator(
    rs: &RootSystem,
    lambda: &AffineWeight,
    order: u32,
    allow_large_weyl: bool,
) -> Result<ExpSeries> {
    deligne_doubled_sum(rs, lambda, order, allow_large_weyl)?.div_exact(2)
}

/// The same doubled sum with each coefficient computed as the derivative of
/// `t_gamma(e^{Lambda + rho_hat})` in the direction `alpha`, divided by
/// `k + h^vee`.
pub fn deligne_derivative_form(
    rs: &RootSystem,
    lambda: &AffineWeight,
    order: u32,
) -> Result<ExpSeries> {
    let alpha = check_stabilizer_conditions(rs, lambda)?;
    let source = lambda + &AffineWeight::rho_hat(rs);
    let kappa = source.level;
    let rs_c = rs.clone();
    let src = source.clone();
    LatticeSum::new(rs, source)
        .coefficient(move |_, g| {
            let translated = crate::series::translate(&rs_c, &src, g);
            let d = rs_c.inner(&translated.fin, &alpha) / kappa;
            assert!(d.is_integer(), "derivative coefficient {d} is not integral");
            d.to_integer()
        })
        .eval(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootType;
    use crate::series::divide_by_denominator;
    use num_bigint::BigInt;

    fn d4() -> RootSystem {
        RootSystem::new(RootType::D, 4).unwrap()
    }

    fn w(rs: &RootSystem, labels: &[i64]) -> AffineWeight {
        AffineWeight::from_labels(rs, labels, Q::zero()).unwrap()
    }

    #[test]
    fn listed_weights_pass() {
        let rs = d4();
        assert!(check_stabilizer_conditions(&rs, &w(&rs, &[-1, 0, 0, 0, 0])).is_ok());
        assert!(check_stabilizer_conditions(&rs, &w(&rs, &[-3, 0, 1, 0, 0])).is_ok());
        assert!(check_stabilizer_conditions(&rs, &w(&rs, &[-2, 0, 0, 0, 0])).is_ok());
    }

    #[test]
    fn violations_name_the_condition() {
        let rs = d4();
        let e = check_stabilizer_conditions(&rs, &w(&rs, &[-3, 0, 0, 0, 0])).unwrap_err();
        assert!(
            matches!(e, Error::ConditionViolation { ref condition, .. } if condition == "root" || condition == "unique"),
            "{e}"
        );
        let neg = AffineWeight::new(FiniteWeight::from_ints(&[-1, 0, 0, 0]), q(-1), Q::zero());
        assert!(matches!(
            check_stabilizer_conditions(&rs, &neg),
            Err(Error::ConditionViolation { ref condition, .. }) if condition == "dominant"
        ));
        let c2 = RootSystem::new(RootType::C, 2).unwrap();
        assert!(check_stabilizer_conditions(&c2, &AffineWeight::lambda0(2).scale(q(-1))).is_err());
    }

    #[test]
    fn d4_level_minus_one_list() {
        let rs = d4();
        let got: Vec<Vec<i64>> = list_deligne(&rs, -1, deligne_window(&rs).unwrap())
            .unwrap()
            .iter()
            .map(|d| {
                d.lambda
                    .labels(&rs)
                    .iter()
                    .map(|x| x.to_integer())
                    .collect()
            })
            .collect();
        let mut want = vec![
            vec![-1, 0, 0, 0, 0],
            vec![-2, 1, 0, 0, 0],
            vec![-2, 0, 0, 1, 0],
            vec![-2, 0, 0, 0, 1],
            vec![-3, 0, 1, 0, 0],
            vec![-3, 1, 0, 1, 0],
            vec![-3, 1, 0, 0, 1],
            vec![-3, 0, 0, 1, 1],
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        want.sort();
        assert_eq!(got_sorted, want);
        assert!(list_deligne(&rs, 0, 2).is_err());
    }

    #[test]
    fn vacuum_levels_follow_the_window() {
        for (t, r) in [(RootType::D, 4), (RootType::E, 6)] {
            let rs = RootSystem::new(t, r).unwrap();
            let b = deligne_window(&rs).unwrap();
            let h = rs.dual_coxeter();
            for k in -b - 2..0 {
                let ok =
                    check_stabilizer_conditions(&rs, &AffineWeight::lambda0(r).scale(q(k))).is_ok();
                assert_eq!(
                    ok,
                    (-h / 6 - 1..-h / 6 - 1 + b).contains(&k),
                    "{t:?}{r} k={k}"
                );
            }
        }
    }

    #[test]
    fn vacuum_numerator_starts_with_one() {
        let rs = d4();
        let num = deligne_numerator(&rs, &w(&rs, &[-1, 0, 0, 0, 0]), 0, false).unwrap();
        assert_eq!(num.len(), 1);
        assert_eq!(num.coeff(&[0; 5]), BigInt::from(1));
    }

    #[test]
    fn derivative_form_agrees() {
        let rs = d4();
        let lambda = w(&rs, &[-1, 0, 0, 0, 0]);
        assert_eq!(
            deligne_doubled_sum(&rs, &lambda, 3, false).unwrap(),
            deligne_derivative_form(&rs, &lambda, 3).unwrap()
        );
    }

    #[test]
    fn vacuum_character_is_nonnegative() {
        let rs = d4();
        let num = deligne_numerator(&rs, &w(&rs, &[-1, 0, 0, 0, 0]), 3, false).unwrap();
        let ch = divide_by_denominator(&rs, &num).unwrap();
        assert_eq!(ch.coeff(&[0; 5]), BigInt::from(1));
        assert!(ch.terms().values().all(|c| c > &BigInt::zero()));
    }
}
