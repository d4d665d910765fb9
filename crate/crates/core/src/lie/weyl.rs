use std::collections::{HashSet, VecDeque};

use num_traits::Zero;

use super::root_system::RootSystem;
use super::weight::FiniteWeight;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};

/// Groups larger than this need an explicit opt-in to enumerate.
pub const WEYL_ENUMERATION_LIMIT: u64 = 1_000_000;

/// An element of the finite Weyl group, acting on fundamental-weight
/// coordinates by an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    sign: i8,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            matrix,
            sign: 1,
        }
    }

    /// The simple reflection `r_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        let rank = rs.rank();
        let mut w = Self::identity(rank);
        for j in 0..rank {
            w.matrix[j * rank + i] -= rs.cartan()[i][j];
        }
        w.sign = -1;
        w
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.rank + j]
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut m = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i * n + j] += a * other.matrix[k * n + j];
                }
            }
        }
        WeylElement {
            rank: n,
            matrix: m,
            sign: self.sign * other.sign,
        }
    }

    pub fn apply(&self, x: &FiniteWeight) -> FiniteWeight {
        let n = self.rank;
        FiniteWeight(
            (0..n)
                .map(|i| (0..n).fold(Q::zero(), |acc, j| acc + q(self.matrix[i * n + j]) * x.0[j]))
                .collect(),
        )
    }

    pub fn apply_ints(&self, x: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i * n + j] * x[j]).sum())
            .collect()
    }

    pub fn determinant(&self) -> i64 {
        let m: Vec<Vec<Q>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| q(self.entry(i, j))).collect())
            .collect();
        crate::linalg::determinant(&m).to_integer()
    }
}

/// Enumerates the Weyl group by breadth-first closure from the simple
/// reflections, deduplicating by matrix. The identity comes first.
pub fn weyl_group(rs: &RootSystem, allow_large: bool) -> Result<Vec<WeylElement>> {
    let order = rs.weyl_order();
    if order > WEYL_ENUMERATION_LIMIT && !allow_large {
        return Err(Error::WeylGroupTooLarge {
            order,
            limit: WEYL_ENUMERATION_LIMIT,
        });
    }
    let gens: Vec<WeylElement> = (0..rs.rank())
        .map(|i| WeylElement::simple_reflection(rs, i))
        .collect();
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(order as usize);
    seen.insert(id.matrix.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&w);
            if seen.insert(next.matrix.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    debug_assert_eq!(out.len() as u64, order);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootType;

    /// Closure of generator products with dedup on the image of a regular
    /// weight: an independent count of |W|.
    fn orbit_closure_count(rs: &RootSystem) -> (usize, usize) {
        let rho = rs.rho().clone();
        let mut seen = HashSet::new();
        let mut odd = 0;
        let mut queue = VecDeque::from([(rho.clone(), false)]);
        seen.insert(rho);
        while let Some((x, parity)) = queue.pop_front() {
            if parity {
                odd += 1;
            }
            for i in 0..rs.rank() {
                let y = rs.reflect_simple(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back((y, !parity));
                }
            }
        }
        (seen.len(), odd)
    }

    #[test]
    fn small_group_orders_and_signs() {
        let a1 = RootSystem::new(RootType::A, 1).unwrap();
        let w = weyl_group(&a1, false).unwrap();
        assert_eq!(w.len(), 2);
        let mut signs: Vec<i8> = w.iter().map(|e| e.sign()).collect();
        signs.sort();
        assert_eq!(signs, vec![-1, 1]);

        let a2 = RootSystem::new(RootType::A, 2).unwrap();
        let w = weyl_group(&a2, false).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().filter(|e| e.sign() == -1).count(), 3);
        assert_eq!(orbit_closure_count(&a2), (6, 3));

        let d4 = RootSystem::new(RootType::D, 4).unwrap();
        assert_eq!(weyl_group(&d4, false).unwrap().len(), 192);
        assert_eq!(orbit_closure_count(&d4).0, 192);
    }

    #[test]
    fn signs_are_determinants_and_sum_to_zero() {
        for (k, r) in [
            (RootType::A, 3),
            (RootType::C, 2),
            (RootType::C, 3),
            (RootType::D, 4),
        ] {
            let rs = RootSystem::new(k, r).unwrap();
            let w = weyl_group(&rs, false).unwrap();
            assert_eq!(w.len() as u64, rs.weyl_order());
            let total: i64 = w.iter().map(|e| e.sign() as i64).sum();
            assert_eq!(total, 0);
            for e in &w {
                assert_eq!(e.determinant(), e.sign() as i64);
            }
        }
    }

    #[test]
    fn e6_enumerates_and_e7_needs_opt_in() {
        let e6 = RootSystem::new(RootType::E, 6).unwrap();
        assert_eq!(weyl_group(&e6, false).unwrap().len(), 51_840);
        let e7 = RootSystem::new(RootType::E, 7).unwrap();
        assert!(matches!(
            weyl_group(&e7, false),
            Err(Error::WeylGroupTooLarge { .. })
        ));
    }

    #[test]
    fn weyl_action_preserves_the_form() {
        let rs = RootSystem::new(RootType::C, 3).unwrap();
        let x = FiniteWeight::from_ints(&[1, -2, 3]);
        let y = FiniteWeight::from_ints(&[0, 4, -1]);
        for w in weyl_group(&rs, false).unwrap() {
            assert_eq!(rs.inner(&w.apply(&x), &w.apply(&y)), rs.inner(&x, &y));
        }
    }
}
