//! Independent computations of the same characters: free-field Fock spaces,
//! product formulas and superdenominator sums.

pub mod fock;
pub mod restriction;
pub mod sigma;
pub mod superdenominator_sum;

pub use fock::{fock_brute_force, fock_char_product, FockCharacter};
pub use restriction::{fock_sl_oracle, fock_to_sl, fock_to_sp, sp_restriction_oracle};
pub use sigma::{
    sigma_characters, sigma_decomposition_brute, sigma_decomposition_product, v_characters,
    SigmaDecomposition, SigmaScan,
};
pub use superdenominator_sum::{
    permutations, superdenominator_from_sl_characters, superdenominator_sum_sl,
    superdenominator_sum_spo,
};
