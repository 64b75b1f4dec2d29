//! Finite fields GF(p^m) with table-driven multiplication.

mod field;
mod poly;

pub use field::{field, find_primitive_poly, is_primitive_poly, FieldCtx, FieldElem};
pub use poly::Poly;

