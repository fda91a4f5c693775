//! Compositions, permutations and their descent statistics.

mod colored;
mod composition;
mod permutation;

pub use colored::{ColoredComposition, ColoredPart};
pub use composition::{Composition, TypeBComposition};
pub use permutation::{standardize, standardize_signed, Permutation, SignedPermutation};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("at least one part is required")]
    Empty,
    #[error("not a permutation of 1..n")]
    NotAPermutation,
    #[error("repeated letter in a word to standardize")]
    DuplicateLetter,
    #[error("length mismatch")]
    LengthMismatch,
    #[error("permutation does not have the required descent shape")]
    ShapeMismatch,
    #[error("color {color} is out of range for level {level}")]
    ColorOutOfRange { color: u8, level: u8 },
    #[error("unsupported level {0}")]
    BadLevel(u8),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
