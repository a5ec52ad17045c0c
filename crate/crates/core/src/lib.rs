//! Exact combinatorics and character theory for reductive groups of rank at
//! most three, with the machinery needed to check tilting-module criteria.

pub mod error;
pub mod rootsystem;
pub mod scalar;
pub mod weight;

pub use error::{Error, Result};
pub use rootsystem::{Kind, RootSystem, WeylElement};
pub use scalar::{Coefficient, ExactField};
pub use weight::{Weight, MAX_RANK};
pub mod character;
pub mod weyl;

pub use character::{CharacterOf, WeylSum};

/// Characters with arbitrary-precision coefficients.
pub type Character = CharacterOf<num_bigint::BigInt>;
/// Weyl-basis expansions with arbitrary-precision coefficients.
pub type WeylExpansion = WeylSum<num_bigint::BigInt>;
pub mod alcove;
pub mod decomposition;
pub mod shapovalov;
pub mod babyverma;
pub mod bundle;
pub mod verifier;
pub mod cohomology;
