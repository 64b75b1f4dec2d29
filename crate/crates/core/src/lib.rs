//! Construction and verification of Hadamard and skew Hadamard matrices.

pub mod arith;
pub mod catalog;
pub mod constructions;
pub mod diffsets;
pub mod error;
pub mod exactmat;
pub mod galois;
pub mod registry;
pub mod seqfam;

pub use error::{Error, Result};
pub use exactmat::{Matrix, SignMatrix};
