//! Design-property checkers.
//!
//! Checkers never fail with an error: they answer `true`/`false` and, in
//! verbose mode, print the first violated property to stderr. The `*_defect`
//! variants return that property as a value instead.

use std::fmt;

use super::matrix::{dot, Matrix};

/// First property a candidate Hadamard matrix violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    NotSquare { rows: usize, cols: usize },
    BadEntry { row: usize, col: usize, value: i8 },
    NotOrthogonal { first: usize, second: usize, dot: i64 },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Defect::BadEntry { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is not +1 or -1")
            }
            Defect::NotOrthogonal { first, second, dot } => write!(
                f,
                "rows {first},{second} not orthogonal (inner product {dot})"
            ),
        }
    }
}

/// Why a matrix is not skew Hadamard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkewDefect {
    NotHadamard(Defect),
    /// Hadamard, but `H + H^T != 2I` at `(row, col)`.
    NotSkew { row: usize, col: usize },
}

impl fmt::Display for SkewDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkewDefect::NotHadamard(d) => write!(f, "not Hadamard: {d}"),
            SkewDefect::NotSkew { row, col } if row == col => {
                write!(f, "Hadamard but not skew: diagonal entry {row} is not +1")
            }
            SkewDefect::NotSkew { row, col } => write!(
                f,
                "Hadamard but not skew: entries ({row},{col}) and ({col},{row}) are not opposite"
            ),
        }
    }
}

/// Rows of a ±1 matrix packed one bit per entry (set bit = -1).
struct PackedRows {
    words: usize,
    bits: Vec<u64>,
}

impl PackedRows {
    fn new(m: &Matrix) -> Self {
        let words = m.cols().div_ceil(64);
        let mut bits = vec![0u64; words * m.rows()];
        for i in 0..m.rows() {
            for (j, &v) in m.row(i).iter().enumerate() {
                if v < 0 {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        PackedRows { words, bits }
    }

    #[inline]
    fn disagreements(&self, i: usize, j: usize) -> u32 {
        let a = &self.bits[i * self.words..(i + 1) * self.words];
        let b = &self.bits[j * self.words..(j + 1) * self.words];
        a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones()).sum()
    }
}

/// Returns the first failed Hadamard property, scanning row pairs in order.
pub fn hadamard_defect(h: &Matrix) -> Option<Defect> {
    if !h.is_square() {
        return Some(Defect::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let n = h.order();
    for i in 0..n {
        for (j, &v) in h.row(i).iter().enumerate() {
            if v != 1 && v != -1 {
                return Some(Defect::BadEntry { row: i, col: j, value: v });
            }
        }
    }
    let packed = PackedRows::new(h);
    for i in 0..n {
        for j in i + 1..n {
            let d = n as i64 - 2 * packed.disagreements(i, j) as i64;
            if d != 0 {
                return Some(Defect::NotOrthogonal {
                    first: i,
                    second: j,
                    dot: d,
                });
            }
        }
    }
    None
}

pub fn is_hadamard(h: &Matrix, verbose: bool) -> bool {
    match hadamard_defect(h) {
        None => true,
        Some(d) => {
            if verbose {
                eprintln!("{d}");
            }
            false
        }
    }
}

pub fn skew_hadamard_defect(h: &Matrix) -> Option<SkewDefect> {
    if let Some(d) = hadamard_defect(h) {
        return Some(SkewDefect::NotHadamard(d));
    }
    for i in 0..h.order() {
        if h.get(i, i) != 1 {
            return Some(SkewDefect::NotSkew { row: i, col: i });
        }
        for j in 0..i {
            if h.get(i, j) != -h.get(j, i) {
                return Some(SkewDefect::NotSkew { row: j, col: i });
            }
        }
    }
    None
}

pub fn is_skew_hadamard(h: &Matrix, verbose: bool) -> bool {
    match skew_hadamard_defect(h) {
        None => true,
        Some(d) => {
            if verbose {
                eprintln!("{d}");
            }
            false
        }
    }
}

/// Does `sum M M^T` equal `scale * I`?
pub fn gram_sum_is_scalar(mats: &[&Matrix], scale: i64) -> bool {
    let Some(first) = mats.first() else {
        return false;
    };
    let n = first.rows();
    if mats.iter().any(|m| m.rows() != n || m.cols() != first.cols()) {
        return false;
    }
    for i in 0..n {
        for j in i..n {
            let s: i64 = mats.iter().map(|m| dot(m.row(i), m.row(j))).sum();
            if s != if i == j { scale } else { 0 } {
                return false;
            }
        }
    }
    true
}

/// Why four matrices are not T-matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TMatrixDefect {
    Shape,
    NotCirculant(usize),
    /// Position `(row, col)` is non-zero in `count` of the four matrices.
    Support { row: usize, col: usize, count: usize },
    Gram,
}

impl fmt::Display for TMatrixDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TMatrixDefect::Shape => f.write_str("matrices are not square of one order"),
            TMatrixDefect::NotCirculant(k) => write!(f, "matrix {k} is not circulant"),
            TMatrixDefect::Support { row, col, count } => write!(
                f,
                "position ({row},{col}) is non-zero in {count} matrices, expected exactly 1"
            ),
            TMatrixDefect::Gram => f.write_str("sum of X X^T is not nI"),
        }
    }
}

pub fn t_matrices_defect(x: [&Matrix; 4]) -> Option<TMatrixDefect> {
    let n = x[0].rows();
    if x.iter().any(|m| !m.is_square() || m.rows() != n) {
        return Some(TMatrixDefect::Shape);
    }
    if let Some(k) = x.iter().position(|m| !m.is_circulant()) {
        return Some(TMatrixDefect::NotCirculant(k));
    }
    for i in 0..n {
        for j in 0..n {
            let count = x.iter().filter(|m| m.get(i, j) != 0).count();
            if count != 1 {
                return Some(TMatrixDefect::Support { row: i, col: j, count });
            }
        }
    }
    if !gram_sum_is_scalar(&x, n as i64) {
        return Some(TMatrixDefect::Gram);
    }
    None
}

pub fn are_t_matrices(x: [&Matrix; 4]) -> bool {
    t_matrices_defect(x).is_none()
}

/// Zero diagonal, ±1 elsewhere and `C C^T = (n-1) I`.
pub fn is_conference(c: &Matrix) -> bool {
    if !c.is_square() {
        return false;
    }
    let n = c.order();
    let shape_ok = (0..n).all(|i| {
        (0..n).all(|j| {
            let v = c.get(i, j);
            if i == j {
                v == 0
            } else {
                v == 1 || v == -1
            }
        })
    });
    shape_ok && gram_sum_is_scalar(&[c], n as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::circulant;

    fn m(rows: &[&[i8]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn hadamard_examples() {
        assert!(is_hadamard(&m(&[&[1]]), false));
        assert!(is_hadamard(&m(&[&[1, 1], &[1, -1]]), false));
        let ones = m(&[&[1, 1], &[1, 1]]);
        assert!(!is_hadamard(&ones, true));
        assert_eq!(
            hadamard_defect(&ones).unwrap().to_string(),
            "rows 0,1 not orthogonal (inner product 2)"
        );
        assert!(matches!(
            hadamard_defect(&Matrix::identity(2)),
            Some(Defect::BadEntry { row: 0, col: 1, value: 0 })
        ));
        assert!(matches!(
            hadamard_defect(&Matrix::filled(1, 2, 1).unwrap()),
            Some(Defect::NotSquare { .. })
        ));
    }

    #[test]
    fn skew_examples() {
        assert!(is_skew_hadamard(&m(&[&[1, 1], &[-1, 1]]), false));
        let sylvester = m(&[&[1, 1], &[1, -1]]);
        let d = skew_hadamard_defect(&sylvester).unwrap();
        assert!(d.to_string().starts_with("Hadamard but not skew"));
        let ones = m(&[&[1, 1], &[1, 1]]);
        assert!(skew_hadamard_defect(&ones).unwrap().to_string().starts_with("not Hadamard"));
    }

    #[test]
    fn t_matrix_examples() {
        let one = m(&[&[1]]);
        let zero = m(&[&[0]]);
        assert!(are_t_matrices([&one, &zero, &zero, &zero]));
        assert!(matches!(
            t_matrices_defect([&one, &one, &zero, &zero]),
            Some(TMatrixDefect::Support { count: 2, .. })
        ));
        let x1 = circulant(&[1, 0, 0, 0, 0, 0, 0]).unwrap();
        let x2 = circulant(&[0, 1, 1, -1, 0, 0, 0]).unwrap();
        let x3 = circulant(&[0, 0, 0, 0, 1, 0, 1]).unwrap();
        let x4 = circulant(&[0, 0, 0, 0, 0, 1, 0]).unwrap();
        assert!(are_t_matrices([&x1, &x2, &x3, &x4]));
    }

    #[test]
    fn packed_rows_match_plain_dot_products() {
        // 70 columns exercises a partial second word.
        let a: Vec<i8> = (0..70).map(|i| if i % 3 == 0 { -1 } else { 1 }).collect();
        let b: Vec<i8> = (0..70).map(|i| if i % 5 == 1 { -1 } else { 1 }).collect();
        let mm = Matrix::from_rows(&[a.clone(), b.clone()]).unwrap();
        let packed = PackedRows::new(&mm);
        assert_eq!(70 - 2 * packed.disagreements(0, 1) as i64, dot(&a, &b));
    }
}
