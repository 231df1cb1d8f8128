//! Orthosymplectic tableaux, spo-insertion with jeu de taquin, the
//! Cauchy-type correspondences built on them, and an exact Laurent
//! polynomial engine for checking the resulting identities.
//!
//! Everything here is exact and deterministic. Exhaustive sweeps run
//! data-parallel when the `parallel` feature is enabled (the default)
//! and sequentially otherwise; see [`exec::Exec`].

pub mod alphabet;
pub mod array;
pub mod characters;
pub mod correspond;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod insertion;
pub mod monomial;
pub mod partition;
pub mod sweep;
pub mod tableau;

pub use alphabet::{compare_letters, AlphabetParams, Letter, LetterKind};
pub use array::{ArrayClass, ArrayViolation, TwoLineArray};
pub use error::{Error, Result};
pub use monomial::Monomial;
pub use partition::{Partition, SkewShape};
pub use tableau::{Cell, Tableau, TableauKind};
