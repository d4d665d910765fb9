use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::weight::FiniteWeight;
use crate::error::{Error, Result};
use crate::linalg::{self, q, QMatrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    C,
    D,
    E,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E => "E",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E" => Ok(RootType::E),
            other => Err(Error::UnsupportedType {
                kind: other.to_string(),
                rank: 0,
                reason: "only types A, C, D and E are supported".into(),
            }),
        }
    }
}

/// Finite root data of a simple Lie algebra, normalized so that long roots
/// have square length 2. Weights are stored in fundamental-weight coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    gram: QMatrix,
    /// `cartan[i][j] = (alpha_i | alpha_j^vee)`, i.e. row i holds the
    /// fundamental-weight coordinates of `alpha_i`.
    cartan: Vec<Vec<i64>>,
    fund_gram: QMatrix,
    /// Maps fundamental-weight coordinates to simple-root coordinates.
    to_root_coords: QMatrix,
    /// `to_root_coords` scaled by `root_denominator`, so it is integral.
    to_root_coords_int: Vec<Vec<i64>>,
    root_denominator: i64,
    positive_roots: Vec<FiniteWeight>,
    positive_root_coords: Vec<Vec<i64>>,
    long_roots: Vec<FiniteWeight>,
    theta: FiniteWeight,
    rho: FiniteWeight,
    dual_coxeter: i64,
    coxeter: i64,
    height_norm: f64,
}

impl RootSystem {
    /// Builds the root system of type `kind` and the given rank.
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        let unsupported = |reason: &str| Error::UnsupportedType {
            kind: kind.to_string(),
            rank,
            reason: reason.to_string(),
        };
        let gram = match kind {
            RootType::A if rank >= 1 => chain_gram(rank, &[]),
            RootType::C if rank >= 2 => {
                let mut g = chain_gram(rank, &[]);
                for i in 0..rank - 1 {
                    g[i][i] = q(1);
                    if i + 1 < rank - 1 {
                        g[i][i + 1] = Q::new(-1, 2);
                        g[i + 1][i] = Q::new(-1, 2);
                    }
                }
                g[rank - 2][rank - 1] = q(-1);
                g[rank - 1][rank - 2] = q(-1);
                g
            }
            RootType::D if rank == 4 => edge_gram(4, &[(0, 1), (1, 2), (1, 3)]),
            RootType::E if (6..=8).contains(&rank) => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..rank - 1).map(|i| (i, i + 1)));
                edge_gram(rank, &edges)
            }
            RootType::A => return Err(unsupported("rank must be at least 1")),
            RootType::C => return Err(unsupported("rank must be at least 2")),
            RootType::D => return Err(unsupported("only D4 is supported")),
            RootType::E => return Err(unsupported("rank must be 6, 7 or 8")),
        };
        Ok(Self::from_gram(kind, gram))
    }

    fn from_gram(kind: RootType, gram: QMatrix) -> Self {
        let rank = gram.len();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = q(2) * gram[i][j] / gram[j][j];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let cartan_q: QMatrix = cartan
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        let to_root_coords =
            linalg::inverse(&linalg::transpose(&cartan_q)).expect("Cartan matrix is invertible");
        let root_denominator = linalg::common_denominator(&to_root_coords);
        let to_root_coords_int = to_root_coords
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| (x * root_denominator).to_integer())
                    .collect()
            })
            .collect();
        // (Lambda_i | Lambda_j) = (G_ii / 2) (G^{-1})_ij (G_jj / 2)
        let ginv = linalg::inverse(&gram).expect("Gram matrix is invertible");
        let fund_gram: QMatrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| gram[i][i] / 2 * ginv[i][j] * gram[j][j] / 2)
                    .collect()
            })
            .collect();

        let positive_root_coords = positive_roots_by_reflection(&cartan);
        let positive_roots: Vec<FiniteWeight> = positive_root_coords
            .iter()
            .map(|k| {
                let mut c = vec![Q::zero(); rank];
                for (i, &ki) in k.iter().enumerate() {
                    for j in 0..rank {
                        c[j] += q(ki * cartan[i][j]);
                    }
                }
                FiniteWeight(c)
            })
            .collect();

        let mut sys = RootSystem {
            kind,
            rank,
            gram,
            cartan,
            fund_gram,
            to_root_coords,
            to_root_coords_int,
            root_denominator,
            positive_roots,
            positive_root_coords,
            long_roots: Vec::new(),
            theta: FiniteWeight::zero(rank),
            rho: FiniteWeight(vec![Q::one(); rank]),
            dual_coxeter: 0,
            coxeter: 0,
            height_norm: 0.0,
        };
        let mut long = Vec::new();
        for a in &sys.positive_roots {
            if sys.inner(a, a) == q(2) {
                long.push(a.clone());
                long.push(-a);
            }
        }
        long.sort();
        sys.long_roots = long;
        let (theta_idx, _) = sys
            .positive_root_coords
            .iter()
            .enumerate()
            .max_by_key(|(_, k)| k.iter().sum::<i64>())
            .expect("at least one root");
        sys.theta = sys.positive_roots[theta_idx].clone();
        sys.coxeter = sys.positive_root_coords[theta_idx].iter().sum::<i64>() + 1;
        sys.dual_coxeter = (sys.inner(&sys.rho, &sys.theta) + Q::one()).to_integer();

        // |H| where (x|H) = ht(x); used only to size enumeration boxes.
        let hvec: Vec<Q> = (0..rank)
            .map(|j| (0..rank).map(|i| sys.to_root_coords[i][j]).sum())
            .collect();
        let fg_inv = linalg::inverse(&sys.fund_gram).expect("form is nondegenerate");
        let hh = linalg::mat_vec(&fg_inv, &hvec)
            .iter()
            .zip(&hvec)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b);
        sys.height_norm = hh.to_f64().unwrap_or(0.0).sqrt();
        sys
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn is_simply_laced(&self) -> bool {
        !matches!(self.kind, RootType::C)
    }

    pub fn simple_root(&self, i: usize) -> FiniteWeight {
        FiniteWeight::from_ints(&self.cartan[i])
    }

    pub fn simple_roots(&self) -> Vec<FiniteWeight> {
        (0..self.rank).map(|i| self.simple_root(i)).collect()
    }

    /// `alpha_i^vee = 2 alpha_i / (alpha_i | alpha_i)`.
    pub fn simple_coroot(&self, i: usize) -> FiniteWeight {
        self.simple_root(i).scale(q(2) / self.gram[i][i])
    }

    pub fn coroot_basis(&self) -> Vec<FiniteWeight> {
        (0..self.rank).map(|i| self.simple_coroot(i)).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> FiniteWeight {
        FiniteWeight::fundamental(self.rank, i)
    }

    pub fn fundamental_weights(&self) -> Vec<FiniteWeight> {
        (0..self.rank).map(|i| self.fundamental_weight(i)).collect()
    }

    pub fn positive_roots(&self) -> &[FiniteWeight] {
        &self.positive_roots
    }

    /// Simple-root coordinates of each positive root, in the same order as
    /// [`Self::positive_roots`].
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn long_roots(&self) -> &[FiniteWeight] {
        &self.long_roots
    }

    pub fn theta(&self) -> &FiniteWeight {
        &self.theta
    }

    pub fn rho(&self) -> &FiniteWeight {
        &self.rho
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn coxeter(&self) -> i64 {
        self.coxeter
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    pub fn inner(&self, x: &FiniteWeight, y: &FiniteWeight) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                acc += x.0[i] * self.fund_gram[i][j] * y.0[j];
            }
        }
        acc
    }

    pub fn try_inner(&self, x: &FiniteWeight, y: &FiniteWeight) -> Result<Q> {
        for w in [x, y] {
            if w.rank() != self.rank {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    got: w.rank(),
                });
            }
        }
        Ok(self.inner(x, y))
    }

    pub fn norm_sq(&self, x: &FiniteWeight) -> Q {
        self.inner(x, x)
    }

    /// `(x | beta^vee)` for a root `beta`.
    pub fn pair_coroot(&self, x: &FiniteWeight, beta: &FiniteWeight) -> Q {
        q(2) * self.inner(x, beta) / self.inner(beta, beta)
    }

    /// Reflection in the hyperplane orthogonal to the root `beta`.
    pub fn reflect(&self, x: &FiniteWeight, beta: &FiniteWeight) -> FiniteWeight {
        x - &beta.scale(self.pair_coroot(x, beta))
    }

    pub fn reflect_simple(&self, x: &FiniteWeight, i: usize) -> FiniteWeight {
        let c = x.0[i];
        let mut out = x.clone();
        for j in 0..self.rank {
            out.0[j] -= c * q(self.cartan[i][j]);
        }
        out
    }

    /// Simple-root coordinates, as rationals.
    pub fn root_coords_q(&self, x: &FiniteWeight) -> Vec<Q> {
        linalg::mat_vec(&self.to_root_coords, &x.0)
    }

    /// Simple-root coordinates; fails if `x` is not in the root lattice.
    pub fn root_coords(&self, x: &FiniteWeight) -> Result<Vec<i64>> {
        self.root_coords_q(x)
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotInRootLattice(x.to_string()))
                }
            })
            .collect()
    }

    /// Integer matrix `D * P` with `P` the fundamental-to-root coordinate map.
    pub(crate) fn root_coords_scaled(&self) -> (&[Vec<i64>], i64) {
        (&self.to_root_coords_int, self.root_denominator)
    }

    pub fn height(&self, x: &FiniteWeight) -> Q {
        self.root_coords_q(x).into_iter().sum()
    }

    /// Norm of the vector representing the height functional.
    pub(crate) fn height_norm(&self) -> f64 {
        self.height_norm
    }

    /// Brings `x` to the dominant chamber by simple reflections. Returns the
    /// dominant representative and the parity of the number of reflections.
    pub fn to_dominant(&self, x: &FiniteWeight) -> (FiniteWeight, bool) {
        let mut w = x.clone();
        let mut odd = false;
        while let Some(i) = (0..self.rank).find(|&i| w.0[i].is_negative()) {
            w = self.reflect_simple(&w, i);
            odd = !odd;
        }
        (w, odd)
    }

    /// True if `x` is fixed by some reflection of the Weyl group.
    pub fn is_singular(&self, x: &FiniteWeight) -> bool {
        let (d, _) = self.to_dominant(x);
        d.0.iter().any(|c| c.is_zero())
    }

    /// `prod_{alpha > 0} (lambda + rho | alpha) / (rho | alpha)`.
    pub fn weyl_dim(&self, lambda: &FiniteWeight) -> Q {
        let shifted = lambda + &self.rho;
        self.positive_roots.iter().fold(Q::one(), |acc, a| {
            acc * self.inner(&shifted, a) / self.inner(&self.rho, a)
        })
    }

    /// The order of the Weyl group, from the classical formulas.
    pub fn weyl_order(&self) -> u64 {
        let fact = |n: u64| (1..=n).product::<u64>();
        match self.kind {
            RootType::A => fact(self.rank as u64 + 1),
            RootType::C => (1u64 << self.rank) * fact(self.rank as u64),
            RootType::D => 192,
            RootType::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
        }
    }

    /// The diagram automorphism of A_l reversing the node order (fixes the
    /// affine node 0).
    pub fn diagram_flip(&self, x: &FiniteWeight) -> FiniteWeight {
        let mut c = x.0.clone();
        c.reverse();
        FiniteWeight(c)
    }

    /// For type C: `gamma_i = alpha_i^vee + ... + alpha_l^vee`, a Z-basis of
    /// the coroot lattice.
    pub fn gamma_basis(&self) -> Result<Vec<FiniteWeight>> {
        if self.kind != RootType::C {
            return Err(Error::Precondition(format!(
                "gamma basis is defined for type C only, not {}",
                self.label()
            )));
        }
        let coroots = self.coroot_basis();
        Ok((0..self.rank)
            .map(|i| {
                coroots[i..]
                    .iter()
                    .fold(FiniteWeight::zero(self.rank), |acc, c| &acc + c)
            })
            .collect())
    }
}

fn chain_gram(rank: usize, _extra: &[(usize, usize)]) -> QMatrix {
    let edges: Vec<(usize, usize)> = (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    edge_gram(rank, &edges)
}

fn edge_gram(rank: usize, edges: &[(usize, usize)]) -> QMatrix {
    let mut g = vec![vec![Q::zero(); rank]; rank];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = q(2);
    }
    for &(i, j) in edges {
        g[i][j] = q(-1);
        g[j][i] = q(-1);
    }
    g
}

/// All positive roots in simple-root coordinates, obtained as the orbit of
/// the simple roots under simple reflections. Sorted by height, then
/// lexicographically.
fn positive_roots_by_reflection(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            // (beta | alpha_i^vee) = sum_j k_j cartan[j][i]
            let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|k| k.iter().all(|&c| c >= 0))
        .collect();
    pos.sort_by_key(|k| (k.iter().sum::<i64>(), k.clone()));
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(kind: RootType, rank: usize) -> RootSystem {
        RootSystem::new(kind, rank).unwrap()
    }

    #[test]
    fn a1_basics() {
        let a1 = rs(RootType::A, 1);
        let alpha = a1.simple_root(0);
        assert_eq!(a1.inner(&alpha, &alpha), q(2));
        assert_eq!(a1.rho(), &FiniteWeight::from_ints(&[1]));
        assert_eq!(a1.dual_coxeter(), 2);
    }

    #[test]
    fn dual_coxeter_numbers() {
        for n in 2..=6 {
            assert_eq!(rs(RootType::A, n - 1).dual_coxeter(), n as i64);
        }
        for n in 2..=4 {
            assert_eq!(rs(RootType::C, n).dual_coxeter(), n as i64 + 1);
        }
        assert_eq!(rs(RootType::D, 4).dual_coxeter(), 6);
        assert_eq!(rs(RootType::E, 6).dual_coxeter(), 12);
        assert_eq!(rs(RootType::E, 7).dual_coxeter(), 18);
        assert_eq!(rs(RootType::E, 8).dual_coxeter(), 30);
    }

    #[test]
    fn dimensions_match_classical_values() {
        assert_eq!(rs(RootType::A, 2).dim(), 8);
        assert_eq!(rs(RootType::C, 2).dim(), 10);
        assert_eq!(rs(RootType::C, 3).dim(), 21);
        assert_eq!(rs(RootType::D, 4).dim(), 28);
        assert_eq!(rs(RootType::D, 4).positive_roots().len(), 12);
        assert_eq!(rs(RootType::E, 6).dim(), 78);
        assert_eq!(rs(RootType::E, 7).dim(), 133);
        assert_eq!(rs(RootType::E, 8).dim(), 248);
    }

    #[test]
    fn structural_invariants() {
        for (k, r) in [
            (RootType::A, 1),
            (RootType::A, 3),
            (RootType::C, 2),
            (RootType::C, 3),
            (RootType::D, 4),
            (RootType::E, 6),
            (RootType::E, 8),
        ] {
            let s = rs(k, r);
            assert_eq!(s.inner(s.theta(), s.theta()), q(2), "{}", s.label());
            for a in s.long_roots() {
                assert_eq!(s.inner(a, a), q(2));
            }
            for i in 0..r {
                for j in 0..r {
                    let expect = if i == j { q(1) } else { q(0) };
                    assert_eq!(
                        s.inner(&s.fundamental_weight(i), &s.simple_coroot(j)),
                        expect
                    );
                }
                assert_eq!(s.inner(s.rho(), &s.simple_coroot(i)), q(1));
            }
            // h^vee = (rho | theta^vee) + 1 with theta long
            assert_eq!(s.inner(s.rho(), s.theta()) + 1, q(s.dual_coxeter()));
        }
    }

    #[test]
    fn theta_reflection_of_rho() {
        let s = rs(RootType::A, 2);
        let th = s.theta().clone();
        let lhs = s.reflect(s.rho(), &th);
        let rhs = s.rho() - &th.scale(s.pair_coroot(s.rho(), &th));
        assert_eq!(lhs, rhs);
        assert_eq!(s.pair_coroot(s.rho(), &th), q(2));
    }

    #[test]
    fn type_c_gamma_basis() {
        let c2 = rs(RootType::C, 2);
        let g = c2.gamma_basis().unwrap();
        assert_eq!(c2.inner(&c2.fundamental_weight(1), &g[0]), q(1));
        for n in 2..=4 {
            let c = rs(RootType::C, n);
            let g = c.gamma_basis().unwrap();
            let l2 = c.fundamental_weight(1);
            for (i, gi) in g.iter().enumerate() {
                let expect = if i < 2 { q(1) } else { q(0) };
                assert_eq!(c.inner(&l2, gi), expect);
            }
            // (gamma | L1) = j1, (gamma | L2 - L1) = j2, (gamma | L_n) = sum j
            let l1 = c.fundamental_weight(0);
            let ln = c.fundamental_weight(n - 1);
            for (i, gi) in g.iter().enumerate() {
                assert_eq!(c.inner(gi, &l1), if i == 0 { q(1) } else { q(0) });
                assert_eq!(c.inner(gi, &(&l2 - &l1)), if i == 1 { q(1) } else { q(0) });
                assert_eq!(c.inner(gi, &ln), q(1));
            }
            // unimodular change of basis to the simple coroots
            let coroots = c.coroot_basis();
            let m: QMatrix = g
                .iter()
                .map(|gi| {
                    let k = c.root_coords_q(gi);
                    let scale: Vec<Q> = coroots
                        .iter()
                        .map(|cr| c.root_coords_q(cr).into_iter().sum())
                        .collect();
                    k.iter().zip(&scale).map(|(a, b)| a / b).collect()
                })
                .collect();
            assert_eq!(linalg::determinant(&m).abs(), q(1));
            // lambda = L2 is the short root (gamma_1 + gamma_2) / 2
            assert_eq!((&g[0] + &g[1]).scale(Q::new(1, 2)), l2);
            assert_eq!(c.inner(&l2, &l2), q(1));
        }
    }

    #[test]
    fn weyl_dimension_formula() {
        let a2 = rs(RootType::A, 2);
        assert_eq!(a2.weyl_dim(&FiniteWeight::zero(2)), q(1));
        assert_eq!(a2.weyl_dim(&FiniteWeight::from_ints(&[1, 1])), q(8));
        let a1 = rs(RootType::A, 1);
        assert_eq!(a1.weyl_dim(&FiniteWeight::from_ints(&[1])), q(2));
        let d4 = rs(RootType::D, 4);
        assert_eq!(d4.weyl_dim(d4.theta()), q(28));
        let e8 = rs(RootType::E, 8);
        assert_eq!(e8.weyl_dim(e8.theta()), q(248));
    }

    #[test]
    fn unsupported_types_are_rejected() {
        assert!(RootSystem::new(RootType::C, 1).is_err());
        assert!(RootSystem::new(RootType::D, 5).is_err());
        assert!(RootSystem::new(RootType::E, 5).is_err());
        let err = RootSystem::new(RootType::A, 0).unwrap_err();
        assert!(err.to_string().contains("A0"));
        assert!(matches!(
            RootSystem::new(RootType::A, 2)
                .unwrap()
                .try_inner(&FiniteWeight::zero(1), &FiniteWeight::zero(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
