//! Exact computations in the word Hopf algebras behind formal multiple zeta
//! values.

pub mod arith;
pub mod cli;
pub mod double_shuffle;
pub mod error;
pub mod goncharov;
pub mod level;
pub mod odd_model;
pub mod postlie;
pub mod word;

pub use arith::{QMatrix, Rational, Valuation};
pub use error::{Error, Result};
pub use word::{Alphabet, NCPoly, Tensor2, Word};
