//! Complementary sequence families and their autocorrelation checks.
//!
//! Sequences are 0-indexed slices of `i8` (entries in `{-1, 0, 1}`).

mod catalog;
mod family;
mod search;

pub use catalog::SequenceCatalog;
pub use family::{
    base_from_turyn_type, interleave, is_complementary, is_t_sequences, npaf,
    t_sequences_from_base, t_sequences_from_turyn, SeqFamily, SeqKind, KNOWN_TURYN_LENGTHS,
};

pub use search::{search_turyn, search_turyn_type};

use crate::error::{Error, Result};

/// Turyn sequences of lengths `(l, l, l-1, l-1)` from the shipped catalog.
pub fn turyn_sequences(l: usize) -> Result<SeqFamily> {
    crate::catalog::global()?.sequences.turyn(l)
}

/// Whether Turyn sequences of length `l` are known to exist.
pub fn turyn_sequences_exist(l: usize) -> bool {
    KNOWN_TURYN_LENGTHS.contains(&l)
}

pub fn turyn_type_sequences(n: usize) -> Result<SeqFamily> {
    crate::catalog::global()?.sequences.turyn_type(n)
}

pub fn turyn_type_sequences_exist(n: usize) -> bool {
    crate::catalog::global().is_ok_and(|c| c.sequences.turyn_type(n).is_ok())
}

/// Base sequences of lengths `(n+p, n+p, n, n)`.
pub fn base_sequences(n: usize, p: usize) -> Result<SeqFamily> {
    crate::catalog::global()?.sequences.base(n, p)
}

pub fn base_sequences_exist(n: usize, p: usize) -> bool {
    crate::catalog::global().is_ok_and(|c| c.sequences.base(n, p).is_ok())
}

/// T-sequences of length `t`, resolved from the catalog.
pub fn t_sequences(t: usize) -> Result<SeqFamily> {
    crate::catalog::global()?.sequences.t_sequences(t)
}

pub fn t_sequences_exist(t: usize) -> bool {
    crate::catalog::global().is_ok_and(|c| c.sequences.t_sequences(t).is_ok())
}

pub(crate) fn missing(what: impl std::fmt::Display) -> Error {
    Error::NotApplicable(format!("no catalog data for {what}"))
}
