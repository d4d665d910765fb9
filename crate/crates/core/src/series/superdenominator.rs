//! Product sides of the affine superdenominators of `sl(n|1)` and `spo(n|2)`.
//!
//! `sl(n|1)` series live in the `n + 1` variables `x_0 = e^{-alpha_0'}`,
//! `x_i = e^{-alpha_i}` (`1 <= i <= n`), where `alpha_n = eps_n - eps_{n+1}`
//! is the odd simple root and `delta = alpha_0' + alpha_1 + ... + alpha_n`.
//!
//! `spo(n|2)`, `n = 2 n'`, series live in the `n' + 2` variables for
//! `alpha_0', alpha_*, alpha_1, ..., alpha_{n'}`, where `alpha_*` is the odd
//! simple root, `alpha_1, ..., alpha_{n'}` are those of `sp_n` and
//! `delta = alpha_0' + alpha_* + theta`, so the `sp_n` root `alpha_0` is
//! `alpha_0' + alpha_*`.
//!
//! The finite part of a base weight is recorded by its labels
//! `(lambda | alpha_i^vee)` for the even simple roots and `(lambda | alpha)`
//! for the odd one.

use super::affine::AffineWeight;
use super::denominator::denominator;
use super::exp_series::{height, ExpSeries, Exps};
use super::qseries::QSeries;
use crate::error::Result;
use crate::lie::{FiniteWeight, RootSystem, RootType};
use crate::linalg::{q, Q};

/// The affine Weyl vector of `sl(n|1)`: labels `(1, ..., 1, 0)`, level `n - 1`.
pub fn super_rho_hat(n: usize) -> AffineWeight {
    let mut labels = vec![1; n];
    labels[n - 1] = 0;
    AffineWeight::new(
        FiniteWeight::from_ints(&labels),
        q(n as i64 - 1),
        Q::from_integer(0),
    )
}

fn span(n: usize, j: usize, k: u32, sign: i64) -> Option<Exps> {
    // k delta + sign (alpha_j + ... + alpha_n), 1 <= j <= n
    let e: Vec<i64> = (0..=n)
        .map(|i| k as i64 + if i >= j { sign } else { 0 })
        .collect();
    if e.iter().any(|&c| c < 0) || e.iter().all(|&c| c == 0) {
        return None;
    }
    Some(e.into_iter().map(|c| c as u32).collect())
}

/// `e^{-rho_hat'} R_hat'` expanded to total height `order`, with base `rho_hat'`.
pub fn superdenominator_sl(n: usize, order: u32) -> ExpSeries {
    assert!(n >= 2, "sl(n|1) needs n >= 2");
    let nv = n + 1;
    let mut s = ExpSeries::one(super_rho_hat(n), nv, order);
    let height = |e: &Exps| e.iter().sum::<u32>();
    let delta_h = nv as u32;

    // phi(q)^n, q = x^delta
    let phi = QSeries::phi(order / delta_h).pow(n as u32);
    let mut phi_s = ExpSeries::zero(AffineWeight::zero(n), nv, order);
    for (j, c) in phi.coeffs().iter().enumerate() {
        phi_s.add_term(vec![j as u32; nv], c.clone());
    }
    s = phi_s
        .mul(&s)
        .expect("same variable count")
        .with_base(super_rho_hat(n));

    // Even real positive roots of affine sl_n: +-(eps_a - eps_b) + m delta,
    // a < b <= n; eps_a - eps_b = alpha_a + ... + alpha_{b-1}.
    for m in 0..=order / delta_h + 1 {
        for a in 1..n {
            for b in (a + 1)..=n {
                for sign in [1i64, -1] {
                    if m == 0 && sign < 0 {
                        continue;
                    }
                    let e: Vec<i64> = (0..=n)
                        .map(|i| m as i64 + if i >= a && i < b { sign } else { 0 })
                        .collect();
                    if e.iter().any(|&c| c < 0) {
                        continue;
                    }
                    let e: Exps = e.into_iter().map(|c| c as u32).collect();
                    if height(&e) <= order {
                        s = s.mul_binomial(&e, 1);
                    }
                }
            }
        }
    }

    // Odd factors (1 - e^{alpha_j..alpha_n} q^k)^{-1} (1 - e^{-(alpha_j..alpha_n)} q^{k-1})^{-1}.
    for k in 1..=order / delta_h + 1 {
        for j in 1..=n {
            if let Some(e) = span(n, j, k, -1) {
                if height(&e) <= order {
                    s = s.mul_binomial(&e, -1);
                }
            }
            if let Some(e) = span(n, j, k - 1, 1) {
                if height(&e) <= order {
                    s = s.mul_binomial(&e, -1);
                }
            }
        }
    }
    s
}

/// The affine Weyl vector of `spo(n|2)`, `n = 2 n'`: labels `(0, 1, ..., 1)`
/// on `alpha_*, alpha_1, ..., alpha_{n'}`, level `n'`.
pub fn super_rho_hat_spo(n_prime: usize) -> AffineWeight {
    let mut labels = vec![1; n_prime + 1];
    labels[0] = 0;
    AffineWeight::new(
        FiniteWeight::from_ints(&labels),
        q(n_prime as i64),
        Q::from_integer(0),
    )
}

/// `delta` in the `spo(n|2)` variables: `(1, 1, 2, ..., 2, 1)`.
pub fn spo_delta(n_prime: usize) -> Exps {
    let mut d = vec![1, 1];
    d.extend(std::iter::repeat_n(2, n_prime - 1));
    d.push(1);
    d
}

/// Embeds `sp_n` exponents `(k_0, ..., k_{n'})` using `alpha_0 = alpha_0' + alpha_*`.
pub fn embed_sp_in_super(k: &[u32]) -> Exps {
    let mut e = vec![k[0], k[0]];
    e.extend_from_slice(&k[1..]);
    e
}

/// Root coordinates of the odd positive roots `eps_0' - eps_1 = alpha_*` and
/// `eps_0' +- eps_j` in the `spo(n|2)` variables (without `alpha_0'`).
pub fn spo_odd_positive_roots(n_prime: usize) -> Vec<Exps> {
    let mut out = Vec::new();
    // eps_0' = alpha_* + eps_1 and eps_1 -+ eps_j in simple root coordinates.
    for j in 1..=n_prime {
        for sign in [-1i64, 1] {
            let mut e = vec![0u32; n_prime + 2];
            e[1] = 1;
            // eps_1 - eps_j = alpha_1 + ... + alpha_{j-1}
            // eps_1 + eps_j = alpha_1 + ... + alpha_{j-1} + 2 (alpha_j + ... + alpha_{n'-1}) + alpha_{n'}
            if sign < 0 {
                for i in 1..j {
                    e[1 + i] += 1;
                }
            } else {
                for i in 1..j {
                    e[1 + i] += 1;
                }
                for i in j..n_prime {
                    e[1 + i] += 2;
                }
                e[1 + n_prime] += 1;
            }
            // eps_0' - eps_j = alpha_* + (eps_1 - eps_j); eps_0' + eps_j = alpha_* + (eps_1 + eps_j)
            out.push(e);
        }
    }
    out
}

/// `e^{-rho_hat'} R_hat'` for affine `spo(n|2)`, `n = 2 n'`: the `sp_n`
/// denominator, one more `phi(q)`, and the odd factors
/// `(1 - e^{-(k delta - beta)})^{-1} (1 - e^{-((k-1) delta + beta)})^{-1}`.
pub fn superdenominator_spo(n_prime: usize, order: u32) -> Result<ExpSeries> {
    let rs = RootSystem::new(RootType::C, n_prime)?;
    let nv = n_prime + 2;
    let base = super_rho_hat_spo(n_prime);
    let mut s = ExpSeries::zero(base.clone(), nv, order);
    // The embedding never lowers the height.
    for (k, c) in denominator(&rs, order).terms() {
        s.add_term(embed_sp_in_super(k), c.clone());
    }
    let delta = spo_delta(n_prime);
    let delta_h = height(&delta);
    let phi = QSeries::phi(order / delta_h);
    let mut phi_s = ExpSeries::zero(AffineWeight::zero(n_prime + 1), nv, order);
    for (j, c) in phi.coeffs().iter().enumerate() {
        phi_s.add_term(delta.iter().map(|d| d * j as u32).collect(), c.clone());
    }
    s = phi_s.mul(&s)?.with_base(base);
    let odd = spo_odd_positive_roots(n_prime);
    for k in 0..=order / delta_h + 1 {
        for beta in &odd {
            let plus: Exps = delta.iter().zip(beta).map(|(d, b)| d * k + b).collect();
            if height(&plus) <= order {
                s = s.mul_binomial(&plus, -1);
            }
            if k >= 1 {
                let minus: Exps = delta.iter().zip(beta).map(|(d, b)| d * k - b).collect();
                if height(&minus) <= order {
                    s = s.mul_binomial(&minus, -1);
                }
            }
        }
    }
    Ok(s)
}

/// Embeds a series over affine `sl_n` (variables `alpha_0, ..., alpha_{n-1}`)
/// into the `sl(n|1)` variables, using `alpha_0 = alpha_0' + alpha_n`.
pub fn embed_sl_in_super(k: &[u32]) -> Exps {
    let mut e = k.to_vec();
    e.push(k[0]);
    e
}

/// The affine diagram automorphism `alpha_i <-> alpha_{n-i}` (swapping the two
/// odd nodes `alpha_0'` and `alpha_n`), on exponent vectors.
pub fn flip_super(e: &[u32]) -> Exps {
    e.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn constant_term_is_one_and_odd_geometric_series_present() {
        let s = superdenominator_sl(3, 4);
        assert_eq!(s.coeff(&[0, 0, 0, 0]), BigInt::from(1));
        // Only the odd factor (1 - x_3)^{-1} involves x_3 alone.
        for p in 1..=4 {
            assert_eq!(s.coeff(&[0, 0, 0, p]), BigInt::from(1));
        }
    }
}


#[cfg(test)]
mod flip_tests {
    use super::*;

    #[test]
    fn product_is_flip_symmetric() {
        for n in [2, 3, 4] {
            let s = superdenominator_sl(n, 6);
            let flipped = s.remap(n + 1, s.base().clone(), 6, flip_super);
            assert_eq!(flipped, s);
        }
    }
}
