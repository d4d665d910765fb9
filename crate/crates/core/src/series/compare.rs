use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::exp_series::{ExpSeries, Exps};

/// Outcome of comparing two expansions of the same quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub order: u32,
    pub left_terms: usize,
    pub right_terms: usize,
    pub base_matches: bool,
    /// First exponent vector (lexicographic) where the coefficients differ.
    pub mismatch: Option<(Exps, BigInt, BigInt)>,
}

impl Comparison {
    pub fn of(left: &ExpSeries, right: &ExpSeries) -> Comparison {
        let order = left.order().min(right.order());
        let base_matches = left.nvars() == right.nvars()
            && left.base().with_delta(Zero::zero()) == right.base().with_delta(Zero::zero());
        Comparison {
            order,
            left_terms: left.truncate(order).len(),
            right_terms: right.truncate(order).len(),
            base_matches,
            mismatch: left.first_difference(right),
        }
    }

    pub fn holds(&self) -> bool {
        self.base_matches && self.mismatch.is_none()
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(
                f,
                "equal to order {} ({} terms)",
                self.order, self.left_terms
            )
        } else if !self.base_matches {
            write!(f, "base weights differ")
        } else {
            let (e, a, b) = self.mismatch.as_ref().expect("mismatch recorded");
            write!(f, "differ at {e:?}: {a} vs {b} (order {})", self.order)
        }
    }
}
