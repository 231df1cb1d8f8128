//! Characters as exact Laurent polynomials and coefficient-level checks of
//! the Cauchy-type identities.

mod identity;
mod poly;
mod schur;

pub use identity::{
    matrix_count_formulas, verify_cauchy, verify_dual_cauchy, verify_matrix_count, verify_power_identity, DegreeCheck,
    IdentityReport, Mismatch, SideValue,
};
pub use poly::LaurentPolynomial;
pub use schur::{schur, skew_schur, spo_character, symplectic_schur, CharacterMethod, Vars};
