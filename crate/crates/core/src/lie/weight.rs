use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{ToPrimitive, Zero};

use crate::linalg::{q, Q};

/// A weight of the finite Cartan subalgebra, in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeight(pub Vec<Q>);

impl FiniteWeight {
    pub fn zero(rank: usize) -> Self {
        FiniteWeight(vec![Q::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        FiniteWeight(coords.iter().map(|&c| q(c)).collect())
    }

    /// The i-th fundamental weight (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = q(1);
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn scale(&self, s: Q) -> Self {
        FiniteWeight(self.0.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &FiniteWeight {
    type Output = FiniteWeight;
    fn add(self, rhs: &FiniteWeight) -> FiniteWeight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        FiniteWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &FiniteWeight {
    type Output = FiniteWeight;
    fn sub(self, rhs: &FiniteWeight) -> FiniteWeight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        FiniteWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for FiniteWeight {
    type Output = FiniteWeight;
    fn add(self, rhs: FiniteWeight) -> FiniteWeight {
        &self + &rhs
    }
}

impl Sub for FiniteWeight {
    type Output = FiniteWeight;
    fn sub(self, rhs: FiniteWeight) -> FiniteWeight {
        &self - &rhs
    }
}

impl AddAssign<&FiniteWeight> for FiniteWeight {
    fn add_assign(&mut self, rhs: &FiniteWeight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&FiniteWeight> for FiniteWeight {
    fn sub_assign(&mut self, rhs: &FiniteWeight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &FiniteWeight {
    type Output = FiniteWeight;
    fn neg(self) -> FiniteWeight {
        FiniteWeight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for FiniteWeight {
    type Output = FiniteWeight;
    fn neg(self) -> FiniteWeight {
        -&self
    }
}

impl Mul<&FiniteWeight> for i64 {
    type Output = FiniteWeight;
    fn mul(self, rhs: &FiniteWeight) -> FiniteWeight {
        rhs.scale(q(self))
    }
}

impl Mul<&FiniteWeight> for Q {
    type Output = FiniteWeight;
    fn mul(self, rhs: &FiniteWeight) -> FiniteWeight {
        rhs.scale(self)
    }
}
