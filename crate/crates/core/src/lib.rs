//! Exact computer algebra for noncommutative symmetric functions.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod combinatorics;
pub mod fqsym;
pub mod lincomb;
pub mod linalg;
pub mod mr;
pub mod oracle;
pub mod peak;
pub mod scalars;
pub mod sym;
mod words;

pub use combinatorics::{ColoredComposition, Composition, Permutation};
pub use fqsym::{FqsymBasis, FqsymElement};
pub use lincomb::{Graded, LinComb};
pub use linalg::{GradedSubspace, LinalgError};
pub use mr::{MrBasis, MrElement};
pub use scalars::{Cyclo, Field, RatFunc, Rational, Scalar, ScalarError};
pub use sym::{SymBasis, SymElement};
