use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::affine::AffineWeight;
use super::exp_series::{ExpSeries, Exps};
use crate::error::{Error, Result};
use crate::lie::{weyl_group, FiniteWeight, RootSystem, WeylElement};
use crate::linalg::{self, q, Q};

/// Lattice points inspected before giving up.
pub const LATTICE_BOX_LIMIT: u64 = 50_000_000;

type GammaFn<T> = Arc<dyn Fn(&[i64], &FiniteWeight) -> T + Send + Sync>;

/// `sum_{w in W} eps(w) w sum_{gamma} c(gamma) t_gamma(e^{source})` over the
/// lattice spanned by `basis`, restricted to the gammas accepted by the
/// filter. Both the filter and the coefficient see the coordinates of gamma
/// in `basis` and gamma itself.
#[derive(Clone)]
pub struct LatticeSum<'a> {
    rs: &'a RootSystem,
    source: AffineWeight,
    basis: Vec<FiniteWeight>,
    filter: GammaFn<bool>,
    coeff: GammaFn<i64>,
    allow_large_weyl: bool,
}

impl<'a> LatticeSum<'a> {
    /// Sum over the whole coroot lattice with coefficient 1.
    pub fn new(rs: &'a RootSystem, source: AffineWeight) -> Self {
        LatticeSum {
            rs,
            source,
            basis: rs.coroot_basis(),
            filter: Arc::new(|_, _| true),
            coeff: Arc::new(|_, _| 1),
            allow_large_weyl: false,
        }
    }

    pub fn basis(mut self, basis: Vec<FiniteWeight>) -> Self {
        self.basis = basis;
        self
    }

    pub fn filter<F>(mut self, f: F) -> Self
    where
        F: Fn(&[i64], &FiniteWeight) -> bool + Send + Sync + 'static,
    {
        self.filter = Arc::new(f);
        self
    }

    pub fn coefficient<F>(mut self, f: F) -> Self
    where
        F: Fn(&[i64], &FiniteWeight) -> i64 + Send + Sync + 'static,
    {
        self.coeff = Arc::new(f);
        self
    }

    pub fn allow_large_weyl(mut self, allow: bool) -> Self {
        self.allow_large_weyl = allow;
        self
    }

    pub fn source(&self) -> &AffineWeight {
        &self.source
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn basis_vectors(&self) -> &[FiniteWeight] {
        &self.basis
    }

    /// The coefficient of `t_gamma` for `gamma` with the given basis
    /// coordinates, or `None` if the filter rejects it.
    pub fn coefficient_at(&self, coords: &[i64]) -> Option<(FiniteWeight, i64)> {
        let gamma = self
            .basis
            .iter()
            .zip(coords)
            .fold(FiniteWeight::zero(self.rs.rank()), |acc, (b, &j)| {
                &acc + &b.scale(q(j))
            });
        if !(self.filter)(coords, &gamma) {
            return None;
        }
        let c = (self.coeff)(coords, &gamma);
        Some((gamma, c))
    }

    /// The lattice points (basis coordinates) accepted by the filter whose
    /// translates can reach height `order`, with their coefficients.
    pub fn gammas(&self, order: u32) -> Result<Vec<(Vec<i64>, FiniteWeight, i64)>> {
        Ok(self
            .collect_gammas(order)?
            .into_iter()
            .map(|g| (g.coords, g.gamma, g.coeff))
            .collect())
    }

    fn kappa(&self) -> Result<i64> {
        let k = self.source.level;
        if !k.is_positive() {
            return Err(Error::NonPositiveShiftedLevel(k.to_string()));
        }
        if !k.is_integer() || !self.source.fin.is_integral() {
            return Err(Error::Precondition(format!(
                "lattice sums need an integral source weight, got {}",
                self.source
            )));
        }
        Ok(k.to_integer())
    }

    fn collect_gammas(&self, order: u32) -> Result<Vec<GammaTerm>> {
        let rs = self.rs;
        let kappa = self.kappa()?;
        let rank = rs.rank();
        if self.basis.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: self.basis.len(),
            });
        }
        let mu0 = &self.source.fin;
        let h = rs.coxeter();
        let ht_mu0 = rs.height(mu0);

        // Radius bound on |gamma| from the lower bound on the height of any
        // Weyl translate of t_gamma(source).
        let hn = rs.height_norm();
        let norm_mu0 = rs.norm_sq(mu0).to_f64().unwrap_or(0.0).sqrt();
        let a = 0.5 * (h * kappa) as f64;
        let b = h as f64 * norm_mu0 + hn * kappa as f64;
        let c = order as f64 - ht_mu0.to_f64().unwrap_or(0.0) + hn * norm_mu0;
        let disc = b * b + 4.0 * a * c;
        let r = if disc <= 0.0 {
            0.0
        } else {
            (b + disc.sqrt()) / (2.0 * a)
        };
        let r = r * 1.000_001 + 1e-6;

        let gram: Vec<Vec<Q>> = self
            .basis
            .iter()
            .map(|x| self.basis.iter().map(|y| rs.inner(x, y)).collect())
            .collect();
        let ginv = linalg::inverse(&gram)
            .ok_or_else(|| Error::Precondition("lattice basis is degenerate".to_string()))?;
        let bounds: Vec<i64> = (0..rank)
            .map(|k| {
                let dual = ginv[k][k].to_f64().unwrap_or(0.0).max(0.0).sqrt();
                (r * dual).floor() as i64
            })
            .collect();
        let boxsize = bounds
            .iter()
            .fold(1u64, |acc, &b| acc.saturating_mul(2 * b as u64 + 1));
        if boxsize > LATTICE_BOX_LIMIT {
            return Err(Error::BudgetExceeded(boxsize));
        }

        let half_kappa = Q::new(kappa, 2);
        let mut out = Vec::new();
        let mut j: Vec<i64> = bounds.iter().map(|b| -b).collect();
        loop {
            let gamma = j
                .iter()
                .zip(&self.basis)
                .fold(FiniteWeight::zero(rank), |acc, (&c, b)| &acc + &(c * b));
            if (self.filter)(&j, &gamma) {
                let coeff = (self.coeff)(&j, &gamma);
                if coeff != 0 {
                    let mu = mu0 + &(kappa * &gamma);
                    if !rs.is_singular(&mu) {
                        let d = rs.inner(mu0, &gamma) + half_kappa * rs.norm_sq(&gamma);
                        if !d.is_integer() {
                            return Err(Error::Precondition(format!(
                                "translation by {gamma} shifts delta by the non-integer {d}"
                            )));
                        }
                        let d = d.to_integer();
                        let (dom, _) = rs.to_dominant(&mu);
                        let lower = q(h * d) + ht_mu0 - rs.height(&dom);
                        if lower <= q(order as i64) {
                            out.push(GammaTerm {
                                coords: j.clone(),
                                mu: mu.to_ints().expect("integral weight"),
                                gamma,
                                d,
                                coeff,
                            });
                        }
                    }
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == rank {
                    return Ok(out);
                }
                if j[k] < bounds[k] {
                    j[k] += 1;
                    break;
                }
                j[k] = -bounds[k];
                k += 1;
            }
        }
    }

    /// Expands the sum up to total height `order`. The result has base
    /// `source`; terms that would lie outside the cone below it must cancel.
    pub fn eval(&self, order: u32) -> Result<ExpSeries> {
        let rs = self.rs;
        let rank = rs.rank();
        let gammas = self.collect_gammas(order)?;
        let weyl = weyl_group(rs, self.allow_large_weyl)?;
        let (p, den) = rs.root_coords_scaled();
        let mu0 = self.source.fin.to_ints().expect("checked integral");
        let theta = rs.theta().to_ints().expect("theta is integral");

        // Scaled root coordinates of mu0 + d theta for each gamma.
        let top: Vec<Vec<i64>> = gammas
            .iter()
            .map(|g| {
                let x: Vec<i64> = (0..rank).map(|i| mu0[i] + g.d * theta[i]).collect();
                mat_vec_i(p, &x)
            })
            .collect();

        let chunk = (weyl.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
        let acc = weyl
            .par_chunks(chunk)
            .map(|ws| {
                let mut acc: HashMap<Vec<i64>, i128> = HashMap::new();
                for w in ws {
                    let pw = compose_i(p, w, rank);
                    let sign = w.sign() as i64;
                    for (g, t) in gammas.iter().zip(&top) {
                        let wmu = mat_vec_i(&pw, &g.mu);
                        let mut exps = Vec::with_capacity(rank + 1);
                        exps.push(g.d);
                        let mut height = g.d;
                        for i in 0..rank {
                            let scaled = t[i] - wmu[i];
                            debug_assert_eq!(scaled % den, 0);
                            let k = scaled / den;
                            height += k;
                            exps.push(k);
                        }
                        if height <= order as i64 {
                            *acc.entry(exps).or_insert(0) += (sign * g.coeff) as i128;
                        }
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });

        // The smallest offending exponent is reported so errors are reproducible.
        if let Some(e) = acc
            .iter()
            .filter(|(e, c)| **c != 0 && e.iter().any(|&x| x < 0))
            .map(|(e, _)| e)
            .min()
        {
            return Err(Error::OutsideCone(e.clone()));
        }
        let terms: BTreeMap<Exps, BigInt> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(e, c)| (e.into_iter().map(|x| x as u32).collect(), BigInt::from(c)))
            .collect();
        Ok(ExpSeries::from_terms(
            self.source.clone(),
            rank + 1,
            order,
            terms,
        ))
    }
}

struct GammaTerm {
    coords: Vec<i64>,
    gamma: FiniteWeight,
    mu: Vec<i64>,
    d: i64,
    coeff: i64,
}

fn mat_vec_i(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

fn compose_i(p: &[Vec<i64>], w: &WeylElement, rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| (0..rank).map(|k| p[i][k] * w.entry(k, j)).sum())
                .collect()
        })
        .collect()
}

/// `sum_{w in W} eps(w) e^{w mu}` to height `order`, with base the dominant
/// representative of `mu` (the sign is adjusted so the identity holds for
/// `mu` itself). Zero if `mu` is singular.
pub fn alt_weyl_sum(rs: &RootSystem, mu: &AffineWeight, order: u32) -> Result<ExpSeries> {
    let (dom, odd) = rs.to_dominant(&mu.fin);
    let base = AffineWeight::new(dom.clone(), mu.level, mu.delta);
    let mut out = ExpSeries::zero(base, rs.rank() + 1, order);
    if rs.is_singular(&mu.fin) {
        return Ok(out);
    }
    let flip: i64 = if odd { -1 } else { 1 };
    for w in weyl_group(rs, false)? {
        let k = rs.root_coords(&(&dom - &w.apply(&dom)))?;
        let exps: Exps = std::iter::once(0)
            .chain(k.into_iter().map(|c| c as u32))
            .collect();
        out.add_term(exps, BigInt::from(flip * w.sign() as i64));
    }
    Ok(out)
}

/// Applies a finite Weyl group element to every monomial, keeping the base.
/// Fails if an image leaves the cone below the base.
pub fn apply_weyl(rs: &RootSystem, w: &WeylElement, s: &ExpSeries) -> Result<ExpSeries> {
    let rank = rs.rank();
    let base = &s.base().fin;
    let mut out = ExpSeries::zero(s.base().clone(), s.nvars(), s.order());
    for (e, c) in s.terms() {
        let mut m = base + &(e[0] as i64 * rs.theta());
        for i in 0..rank {
            m -= &(e[i + 1] as i64 * &rs.simple_root(i));
        }
        let wm = w.apply(&m);
        let k = rs.root_coords(&(&(base + &(e[0] as i64 * rs.theta())) - &wm))?;
        if k.iter().any(|&x| x < 0) {
            let mut full = vec![e[0] as i64];
            full.extend(k);
            return Err(Error::OutsideCone(full));
        }
        let exps: Exps = std::iter::once(e[0])
            .chain(k.into_iter().map(|x| x as u32))
            .collect();
        out.add_term(exps, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootType;
    use crate::series::affine::translate;
    use num_traits::Zero;

    fn rs(kind: RootType, rank: usize) -> RootSystem {
        RootSystem::new(kind, rank).unwrap()
    }

    #[test]
    fn a1_level_one_at_order_zero_is_single_term() {
        let a1 = rs(RootType::A, 1);
        let source = &AffineWeight::lambda0(1) + &AffineWeight::rho_hat(&a1);
        let s = LatticeSum::new(&a1, source).eval(0).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&[0, 0]), BigInt::from(1));
        let source = &AffineWeight::lambda0(1) + &AffineWeight::rho_hat(&a1);
        assert_eq!(LatticeSum::new(&a1, source).gammas(0).unwrap().len(), 1);
    }

    #[test]
    fn nonpositive_shifted_level_is_rejected() {
        let a1 = rs(RootType::A, 1);
        let source = AffineWeight::lambda0(1).scale(q(-2));
        assert!(matches!(
            LatticeSum::new(&a1, source).eval(2),
            Err(Error::NonPositiveShiftedLevel(_))
        ));
    }

    // Naive oracle: translate and reflect every gamma in a generous box with
    // exact rationals, keep terms of height <= order.
    fn naive(rs: &RootSystem, source: &AffineWeight, order: u32, radius: i64) -> ExpSeries {
        let rank = rs.rank();
        let mut out = ExpSeries::zero(source.clone(), rank + 1, order);
        let basis = rs.coroot_basis();
        let w = weyl_group(rs, false).unwrap();
        let mut j = vec![-radius; rank];
        loop {
            let gamma = j
                .iter()
                .zip(&basis)
                .fold(FiniteWeight::zero(rank), |acc, (&c, b)| &acc + &(c * b));
            let t = translate(rs, source, &gamma);
            for x in &w {
                let fin = x.apply(&t.fin);
                let k0 = source.delta - t.delta;
                let k = rs
                    .root_coords(&(&(&source.fin + &(k0.to_integer() * rs.theta())) - &fin))
                    .unwrap();
                let mut e = vec![k0.to_integer()];
                e.extend(k);
                if e.iter().sum::<i64>() <= order as i64 {
                    assert!(e.iter().all(|&c| c >= 0));
                    out.add_term(
                        e.into_iter().map(|c| c as u32).collect(),
                        BigInt::from(x.sign() as i64),
                    );
                }
            }
            let mut k = 0;
            loop {
                if k == rank {
                    return out;
                }
                if j[k] < radius {
                    j[k] += 1;
                    break;
                }
                j[k] = -radius;
                k += 1;
            }
        }
    }

    #[test]
    fn matches_naive_translation_for_a2_vacuum() {
        let a2 = rs(RootType::A, 2);
        let source = &AffineWeight::lambda0(2) + &AffineWeight::rho_hat(&a2);
        let fast = LatticeSum::new(&a2, source.clone()).eval(6).unwrap();
        let slow = naive(&a2, &source, 6, 4);
        assert_eq!(fast, slow);
    }

    #[test]
    fn matches_naive_translation_for_c2() {
        let c2 = rs(RootType::C, 2);
        let lambda = AffineWeight::from_labels(&c2, &[1, 0, 1], Q::zero()).unwrap();
        let source = &lambda + &AffineWeight::rho_hat(&c2);
        let fast = LatticeSum::new(&c2, source.clone()).eval(6).unwrap();
        let slow = naive(&c2, &source, 6, 4);
        assert_eq!(fast, slow);
    }

    #[test]
    fn alternating_sum_of_a2_rho_has_six_terms() {
        let a2 = rs(RootType::A, 2);
        let rho = AffineWeight::new(a2.rho().clone(), Q::zero(), Q::zero());
        let s = alt_weyl_sum(&a2, &rho, 10).unwrap();
        assert_eq!(s.len(), 6);
        let total: BigInt = s.terms().values().sum();
        assert!(total.is_zero());
        // r_1 contributes -e^{rho - alpha_1}
        assert_eq!(s.coeff(&[0, 1, 0]), BigInt::from(-1));
    }

    #[test]
    fn alternating_sum_vanishes_on_walls() {
        let a2 = rs(RootType::A, 2);
        let mu = AffineWeight::new(FiniteWeight::from_ints(&[0, 3]), Q::zero(), Q::zero());
        assert!(alt_weyl_sum(&a2, &mu, 10).unwrap().is_empty());
    }

    #[test]
    fn apply_weyl_reflects_the_alternating_sum_to_its_negative() {
        let a2 = rs(RootType::A, 2);
        let rho = AffineWeight::new(a2.rho().clone(), Q::zero(), Q::zero());
        let s = alt_weyl_sum(&a2, &rho, 10).unwrap();
        let r1 = WeylElement::simple_reflection(&a2, 0);
        assert_eq!(apply_weyl(&a2, &r1, &s).unwrap(), s.neg());
    }
}
