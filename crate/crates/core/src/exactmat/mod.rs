//! Exact ternary matrices, block assembly and design checkers.

mod block;
mod check;
mod det;
mod io;
mod matrix;

pub use block::{assemble, BlockSpec, Cell};
pub use check::{
    are_t_matrices, gram_sum_is_scalar, hadamard_defect, is_conference, is_hadamard,
    is_skew_hadamard, skew_hadamard_defect, t_matrices_defect, Defect, SkewDefect,
    TMatrixDefect,
};
pub use det::{abs_det_is_maximal, determinant};
pub use io::{parse_any, parse_csv, parse_pm1, to_csv, to_pm1, MatrixDocument};
pub use matrix::{back_identity, circulant, tensor, Matrix, SignMatrix, TernaryMatrix};

