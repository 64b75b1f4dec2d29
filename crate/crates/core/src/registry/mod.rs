//! Order-to-construction dispatch with existence and check semantics.
//!
//! The shipped table names a preferred method for each odd `n`; the
//! resolver falls back through every applicable method when that one lacks
//! data, and reports what it used.

mod resolve;
mod table;

pub use resolve::{
    hadamard_matrix, resolve, resolve_method, skew_hadamard_matrix, ConstructionRecord, ResolveOptions,
    ResolveOutcome, Status,
};
pub use table::{DispatchTable, Method, MethodFilter, MethodKind};
