//! Character formulas for negative-level modules, each evaluated as a
//! lattice sum.

pub mod deligne;
pub mod qdim;
pub mod request;
pub mod sl;
pub mod sp;

pub use deligne::{
    c_tilde, check_stabilizer_conditions, deligne_derivative_form, deligne_doubled_sum,
    deligne_numerator, deligne_sum, deligne_window, list_deligne, DeligneWeight,
};
pub use qdim::{
    direct_sum, graded_height, q_dimension_direct, q_dimension_graded, q_dimension_specialized,
};
pub use request::{CharacterRequest, FormulaId};
pub use sl::{
    half_lattice_sum, level_minus_one_weight, sl2_two_term, sl_half_lattice, two_term_sum,
    weyl_kac, weyl_kac_sum,
};
pub use sp::{
    bracket_complement_check, bracket_sum, long_root_product, omega_reflection_check, parity_sum,
    restricted_sum, sp_character, sp_parity_numerator, sp_parity_rewriting_check, sp_system,
    twisted_denominator_check, SpParityVariant, SpVariant,
};

/// Which of the two mirror-image weights of the half-lattice formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `-(1+s) Lambda_0 + s Lambda_1`, sum over `(gamma | Lambda_bar_1) >= 0`.
    First,
    /// `-(1+s) Lambda_0 + s Lambda_{n-1}`, sum over `(gamma | Lambda_bar_{n-1}) >= 0`.
    Last,
}
