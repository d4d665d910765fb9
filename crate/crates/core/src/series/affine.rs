use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{FiniteWeight, RootSystem};
use crate::linalg::{q, Q};

/// A weight `fin + level * Lambda_0 + delta_coeff * delta` of the affine
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub fin: FiniteWeight,
    pub level: Q,
    pub delta: Q,
}

impl AffineWeight {
    pub fn new(fin: FiniteWeight, level: Q, delta: Q) -> Self {
        AffineWeight { fin, level, delta }
    }

    pub fn zero(rank: usize) -> Self {
        AffineWeight::new(FiniteWeight::zero(rank), Q::zero(), Q::zero())
    }

    pub fn lambda0(rank: usize) -> Self {
        AffineWeight::new(FiniteWeight::zero(rank), q(1), Q::zero())
    }

    pub fn delta(rank: usize) -> Self {
        AffineWeight::new(FiniteWeight::zero(rank), Q::zero(), q(1))
    }

    /// `sum_i m_i Lambda_i + a delta` from the labels `m_0, ..., m_l`.
    pub fn from_labels(rs: &RootSystem, labels: &[i64], delta: Q) -> Result<Self> {
        if labels.len() != rs.rank() + 1 {
            return Err(Error::DimensionMismatch {
                expected: rs.rank() + 1,
                got: labels.len(),
            });
        }
        let comarks = comarks(rs);
        let level = labels
            .iter()
            .zip(&comarks)
            .fold(Q::zero(), |acc, (&m, &a)| acc + q(m * a));
        let fin = FiniteWeight::from_ints(&labels[1..]);
        Ok(AffineWeight::new(fin, level, delta))
    }

    /// The labels `m_0, ..., m_l`, with `m_0 = k - (fin | theta^vee)`.
    pub fn labels(&self, rs: &RootSystem) -> Vec<Q> {
        let mut out = vec![self.level - rs.inner(&self.fin, rs.theta())];
        out.extend(self.fin.0.iter().copied());
        out
    }

    /// `rho_hat = rho + h^vee Lambda_0`.
    pub fn rho_hat(rs: &RootSystem) -> Self {
        AffineWeight::new(rs.rho().clone(), q(rs.dual_coxeter()), Q::zero())
    }

    /// Simple root `alpha_i` of the affine algebra; `alpha_0 = delta - theta`.
    pub fn simple_root(rs: &RootSystem, i: usize) -> Self {
        if i == 0 {
            AffineWeight::new(-rs.theta(), Q::zero(), q(1))
        } else {
            AffineWeight::new(rs.simple_root(i - 1), Q::zero(), Q::zero())
        }
    }

    pub fn with_delta(&self, delta: Q) -> Self {
        AffineWeight::new(self.fin.clone(), self.level, delta)
    }

    pub fn scale(&self, s: Q) -> Self {
        AffineWeight::new(self.fin.scale(s), self.level * s, self.delta * s)
    }
}

/// Comarks `a_i^vee`, the coefficients of `theta^vee` in the simple coroots
/// (`a_0^vee = 1`).
pub fn comarks(rs: &RootSystem) -> Vec<i64> {
    let theta = rs.root_coords(rs.theta()).expect("theta is a root");
    let mut out = vec![1];
    for (i, a) in theta.iter().enumerate() {
        let len = rs.gram()[i][i];
        out.push((q(*a) * len / 2).to_integer());
    }
    out
}

/// The invariant form on affine weights: `(Lambda_0 | delta) = 1`,
/// `(Lambda_0 | Lambda_0) = (delta | delta) = 0`.
pub fn affine_inner(rs: &RootSystem, x: &AffineWeight, y: &AffineWeight) -> Q {
    rs.inner(&x.fin, &y.fin) + x.level * y.delta + x.delta * y.level
}

/// The translation `t_gamma(lambda) = lambda + k gamma - ((lambda|gamma) + k (gamma|gamma) / 2) delta`
/// where `k` is the level of `lambda`.
pub fn translate(rs: &RootSystem, lambda: &AffineWeight, gamma: &FiniteWeight) -> AffineWeight {
    let k = lambda.level;
    let fin = &lambda.fin + &gamma.scale(k);
    let drop = rs.inner(&lambda.fin, gamma) + k * rs.inner(gamma, gamma) / 2;
    AffineWeight::new(fin, k, lambda.delta - drop)
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*L0 + {}*delta", self.fin, self.level, self.delta)
    }
}

impl Add for &AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.fin + &rhs.fin,
            self.level + rhs.level,
            self.delta + rhs.delta,
        )
    }
}

impl Sub for &AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.fin - &rhs.fin,
            self.level - rhs.level,
            self.delta - rhs.delta,
        )
    }
}

impl Neg for &AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        AffineWeight::new(-&self.fin, -self.level, -self.delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootType;

    #[test]
    fn translation_examples() {
        let a1 = RootSystem::new(RootType::A, 1).unwrap();
        let l0 = AffineWeight::lambda0(1);
        let alpha = a1.simple_root(0);
        assert_eq!(translate(&a1, &l0, &FiniteWeight::zero(1)), l0);
        // t_alpha(Lambda_0) = Lambda_0 + alpha - delta
        let t = translate(&a1, &l0, &alpha);
        assert_eq!(t, AffineWeight::new(alpha.clone(), q(1), q(-1)));

        let a2 = RootSystem::new(RootType::A, 2).unwrap();
        let lam = &AffineWeight::rho_hat(&a2) - &AffineWeight::lambda0(2);
        let t = translate(&a2, &lam, &a2.simple_root(0));
        assert_eq!(t.level, lam.level);
    }

    #[test]
    fn labels_round_trip() {
        let d4 = RootSystem::new(RootType::D, 4).unwrap();
        assert_eq!(comarks(&d4), vec![1, 1, 2, 1, 1]);
        let w = AffineWeight::from_labels(&d4, &[-3, 1, 0, 1, 0], Q::zero()).unwrap();
        assert_eq!(w.level, q(-1));
        assert_eq!(w.labels(&d4), vec![q(-3), q(1), q(0), q(1), q(0)]);
        let c3 = RootSystem::new(RootType::C, 3).unwrap();
        assert_eq!(comarks(&c3), vec![1, 1, 1, 1]);
    }

    #[test]
    fn affine_roots_pair_correctly_with_rho_hat() {
        for (k, r) in [(RootType::A, 2), (RootType::C, 2), (RootType::D, 4)] {
            let rs = RootSystem::new(k, r).unwrap();
            let rho_hat = AffineWeight::rho_hat(&rs);
            for i in 0..=r {
                let a = AffineWeight::simple_root(&rs, i);
                let pairing = q(2) * affine_inner(&rs, &rho_hat, &a) / affine_inner(&rs, &a, &a);
                assert_eq!(pairing, q(1));
            }
        }
    }
}
