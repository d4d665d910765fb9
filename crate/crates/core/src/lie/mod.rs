//! Finite root data: root systems of types A, C, D4 and E6-8, their
//! invariant forms, Weyl groups and lattices.

mod root_system;
mod weight;
mod weyl;

pub use root_system::{RootSystem, RootType};
pub use weight::FiniteWeight;
pub use weyl::{weyl_group, WeylElement, WEYL_ENUMERATION_LIMIT};
