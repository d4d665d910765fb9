//! Sum side of the `sl(n|1)` affine superdenominator identity, evaluated in
//! epsilon coordinates with permutations for the Weyl group. It shares no
//! code with the lattice-sum evaluator on purpose.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::formulas::{sl_half_lattice, Side};
use crate::lie::{weyl_group, FiniteWeight, RootSystem, RootType};
use crate::linalg::{self, q, Q};
use crate::series::{embed_sl_in_super, super_rho_hat, super_rho_hat_spo, ExpSeries};
use num_traits::ToPrimitive;

/// All permutations of `0..n` with their signs (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let mut out = vec![(a.clone(), sign)];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `sum_w eps(w) w sum_{gamma in Q} t_gamma(e^{rho_hat'} / (1 - e^{-alpha_n}))`,
/// each summand expanded as a geometric series in the region where the
/// translated `e^{-alpha_n}` is small, to total height `order`.
pub fn superdenominator_sum_sl(n: usize, order: u32) -> Result<ExpSeries> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "sl(n|1) needs n >= 2, got {n}"
        )));
    }
    let big_n = order as i64;
    // Doubled rho of sl_n in epsilon coordinates: 2 rho_i = n + 1 - 2 i (1-based).
    let rho2: Vec<i64> = (1..=n as i64).map(|i| n as i64 + 1 - 2 * i).collect();
    let nm1 = n as i64 - 1;

    // |g| radius from (n+1) d - (n-1) max_w ht(w g) <= N.
    let rho_norm = (rho2.iter().map(|x| x * x).sum::<i64>() as f64).sqrt() / 2.0;
    let ht_norm = ((1..=n as i64).map(|i| i * i).sum::<i64>() as f64).sqrt();
    let a = (n as f64 + 1.0) * nm1 as f64 / 2.0;
    let b = (n as f64 + 1.0) * rho_norm + nm1 as f64 * ht_norm;
    let r =
        ((b + (b * b + 4.0 * a * big_n as f64).sqrt()) / (2.0 * a) * 1.000_001).floor() as i64 + 1;

    let perms = permutations(n);
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut g = vec![-r; n - 1];
    'outer: loop {
        let last = -g.iter().sum::<i64>();
        let mut gamma = g.clone();
        gamma.push(last);
        // (rho|g) and |g|^2
        let rho_g2: i64 = rho2.iter().zip(&gamma).map(|(x, y)| x * y).sum();
        let norm: i64 = gamma.iter().map(|x| x * x).sum();
        // d(p) = (rho|g) + (n-1)/2 |g|^2 - p g_n ; both terms integral
        debug_assert_eq!(rho_g2 % 2, 0);
        debug_assert_eq!((nm1 * norm) % 2, 0);
        let d0 = rho_g2 / 2 + nm1 * norm / 2;
        let gn = gamma[n - 1];
        let (p_start, p_step, sign) = if gn <= 0 {
            (0i64, 1i64, 1i64)
        } else {
            (-1, -1, -1)
        };
        for (w, eps) in &perms {
            // (w v)_{w(i)} = v_i
            let mut winv = vec![0usize; n];
            for (i, &wi) in w.iter().enumerate() {
                winv[wi] = i;
            }
            let mut p = p_start;
            loop {
                let d = d0 - p * gn;
                // x = (rho - w rho) + p (e_{w(n)} - e_{n+1}) - (n-1) w(g), length n+1
                let mut y = vec![0i64; n + 1];
                for i in 0..n {
                    y[i] = (rho2[i] - rho2[winv[i]]) / 2 - nm1 * gamma[winv[i]];
                }
                y[w[n - 1]] += p;
                y[n] -= p;
                y[0] += d;
                y[n] -= d;
                let mut exps = Vec::with_capacity(n + 1);
                exps.push(d);
                let mut partial = 0;
                for v in y.iter().take(n) {
                    partial += v;
                    exps.push(partial);
                }
                debug_assert_eq!(partial + y[n], 0);
                let height: i64 = exps.iter().sum();
                if height > big_n {
                    break;
                }
                *acc.entry(exps).or_insert(0) += eps * sign;
                p += p_step;
            }
        }
        let mut k = 0;
        loop {
            if k == n - 1 {
                break 'outer;
            }
            if g[k] < r {
                g[k] += 1;
                break;
            }
            g[k] = -r;
            k += 1;
        }
    }

    let mut out = ExpSeries::zero(super_rho_hat(n), n + 1, order);
    for (e, c) in acc {
        if c == 0 {
            continue;
        }
        if e.iter().any(|&x| x < 0) {
            return Err(Error::OutsideCone(e));
        }
        out.add_term(e.into_iter().map(|x| x as u32).collect(), BigInt::from(c));
    }
    Ok(out)
}

/// `sum_{w in W_hat} eps(w) w (e^{rho_hat'} / (1 - e^{-alpha_*}))` for affine
/// `spo(n|2)`, `n = 2 n'`, with `W_hat` the affine Weyl group of `sp_n`.
/// `t_gamma` turns `e^{-alpha_*}` into `e^{-alpha_*} q^{(gamma | Lambda_bar_1)}`,
/// so the geometric series runs over `p >= 0` when `(gamma | Lambda_bar_1) >= 0`
/// and over `p < 0` with a minus sign otherwise. Each term
/// `w t_gamma e^{rho_hat' - p alpha_*}` sits at
/// `d alpha_0' + (p + d) alpha_* + (rho - w rho) + p (eps_1 - w eps_1) - n' w gamma + d theta`
/// below `rho_hat'`, where `d = (rho | gamma) + p (gamma | Lambda_bar_1) + n' |gamma|^2 / 2`.
pub fn superdenominator_sum_spo(n_prime: usize, order: u32) -> Result<ExpSeries> {
    let rs = RootSystem::new(RootType::C, n_prime)?;
    let weyl = weyl_group(&rs, false)?;
    let np = q(n_prime as i64);
    let rho = rs.rho().clone();
    let eps1 = rs.fundamental_weight(0);
    let theta = rs.root_coords(rs.theta())?;
    let big_n = order as i64;
    let basis = rs.coroot_basis();
    let l = n_prime;

    // d >= d0 = n'/2 |gamma + rho/n'|^2 - |rho|^2/(2 n') and d <= order bound gamma.
    let gram: Vec<Vec<Q>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| rs.inner(a, b)).collect())
        .collect();
    let inv = linalg::inverse(&gram).expect("coroot Gram matrix is invertible");
    let pair: Vec<Q> = basis.iter().map(|b| -rs.inner(&rho, b) / np).collect();
    let center = linalg::mat_vec(&inv, &pair);
    let r2 = (q(2) * q(big_n) / np + rs.norm_sq(&rho) / (np * np))
        .to_f64()
        .unwrap_or(0.0);
    let mut lo = vec![0i64; l];
    let mut hi = vec![0i64; l];
    for i in 0..l {
        let c = center[i].to_f64().unwrap_or(0.0);
        let w = (r2 * inv[i][i].to_f64().unwrap_or(0.0)).max(0.0).sqrt();
        lo[i] = (c - w).floor() as i64 - 1;
        hi[i] = (c + w).ceil() as i64 + 1;
    }

    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut j = lo.clone();
    'outer: loop {
        let gamma = basis
            .iter()
            .zip(&j)
            .fold(FiniteWeight::zero(l), |a, (b, &c)| &a + &b.scale(q(c)));
        let d0 = rs.inner(&rho, &gamma) + np * rs.norm_sq(&gamma) / q(2);
        if d0 <= q(big_n) {
            let d0 = d0.to_integer();
            let g = rs.inner(&gamma, &eps1).to_integer();
            let (p_start, p_step, sign) = if g >= 0 {
                (0i64, 1i64, 1i64)
            } else {
                (-1, -1, -1)
            };
            for w in &weyl {
                let fixed =
                    rs.root_coords(&(&(&rho - &w.apply(&rho)) - &w.apply(&gamma).scale(np)))?;
                let moved = rs.root_coords(&(&eps1 - &w.apply(&eps1)))?;
                let mut p = p_start;
                loop {
                    let d = d0 + p * g;
                    let mut exps = vec![d, p + d];
                    for i in 0..l {
                        exps.push(fixed[i] + p * moved[i] + d * theta[i]);
                    }
                    if exps.iter().sum::<i64>() > big_n {
                        break;
                    }
                    *acc.entry(exps).or_insert(0) += w.sign() as i64 * sign;
                    p += p_step;
                }
            }
        }
        let mut k = 0;
        loop {
            if k == l {
                break 'outer;
            }
            if j[k] < hi[k] {
                j[k] += 1;
                break;
            }
            j[k] = lo[k];
            k += 1;
        }
    }

    let mut out = ExpSeries::zero(super_rho_hat_spo(n_prime), n_prime + 2, order);
    for (e, c) in acc {
        if c == 0 {
            continue;
        }
        if e.iter().any(|&x| x < 0) {
            return Err(Error::OutsideCone(e));
        }
        out.add_term(e.into_iter().map(|x| x as u32).collect(), BigInt::from(c));
    }
    Ok(out)
}

/// `R_hat'` reassembled from the half-lattice numerators of affine `sl_n`:
/// `sum_{s > 0} e^{-s alpha_0'} R_hat ch L(-(1+s) Lambda_0 + s Lambda_1)
///  + sum_{t >= 0} e^{-t alpha_n} R_hat ch L(-(1+t) Lambda_0 + t Lambda_{n-1})`,
/// each numerator moved from base `rho_hat' + s Lambda_bar_1` (resp.
/// `rho_hat' + t Lambda_bar_{n-1}`) to `rho_hat'`.
pub fn superdenominator_from_sl_characters(n: usize, order: u32) -> Result<ExpSeries> {
    let mut out = ExpSeries::zero(super_rho_hat(n), n + 1, order);
    // Embedding never lowers the height, so order - s suffices for each piece.
    for (side, idx, start) in [(Side::First, 0, 1u32), (Side::Last, n, 0)] {
        for s in start..=order {
            let num = sl_half_lattice(n, s, side, order - s)?;
            for (k, c) in num.terms() {
                let mut e = embed_sl_in_super(k);
                e[idx] += s;
                out.add_term(e, c.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::superdenominator_sl;

    #[test]
    fn permutation_signs() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
        let mut seen: Vec<Vec<usize>> = p.iter().map(|x| x.0.clone()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn sum_side_matches_product_for_small_n() {
        for (n, order) in [(2, 6), (3, 5), (4, 5)] {
            let sum = superdenominator_sum_sl(n, order).unwrap();
            let prod = superdenominator_sl(n, order);
            assert_eq!(sum.first_difference(&prod), None, "n = {n}");
        }
    }

    #[test]
    fn assembly_from_sl_characters() {
        for (n, order) in [(3, 4), (4, 3)] {
            assert_eq!(
                superdenominator_from_sl_characters(n, order).unwrap(),
                superdenominator_sl(n, order),
                "n = {n}"
            );
        }
    }

    #[test]
    fn spo_sum_matches_product() {
        use crate::series::superdenominator_spo;
        for (np, order) in [(2, 6), (3, 4)] {
            assert_eq!(
                superdenominator_sum_spo(np, order).unwrap(),
                superdenominator_spo(np, order).unwrap(),
                "n' = {np}"
            );
        }
    }
}
