use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Dense matrix with entries in {-1, 0, +1}.
///
/// Rectangular shapes are allowed so that borders and tensor factors can be
/// expressed with the same type. Every constructor rejects entries outside
/// the ternary alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i8>,
}

/// Ternary matrices are plain [`Matrix`] values.
pub type TernaryMatrix = Matrix;

fn check_entry(v: i8) -> Result<i8> {
    if (-1..=1).contains(&v) {
        Ok(v)
    } else {
        Err(Error::invalid(format!("entry {v} outside {{-1,0,1}}")))
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &v in &data {
            check_entry(v)?;
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn filled(rows: usize, cols: usize, value: i8) -> Result<Self> {
        check_entry(value)?;
        Ok(Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i8) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(check_entry(f(i, j))?);
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for &v in r {
                data.push(check_entry(v)?);
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix (row count otherwise).
    pub fn order(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i8) -> Result<()> {
        self.data[i * self.cols + j] = check_entry(v)?;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[i8] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scaled(-1)
    }

    /// Multiplies every entry by `sign` (which must be -1, 0 or 1).
    pub fn scaled(&self, sign: i8) -> Matrix {
        debug_assert!((-1..=1).contains(&sign));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| v * sign).collect(),
        }
    }

    fn zip_with(&self, other: &Matrix, op: &str, f: impl Fn(i8, i8) -> i8) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| check_entry(f(a, b)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Entry-wise sum; fails if any entry leaves {-1,0,1}.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sum", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "difference", |a, b| a - b)
    }

    /// Exact integer product. Fails if the result is not ternary.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        let wide = self.matmul_wide(other)?;
        let data = wide
            .into_iter()
            .map(|v| {
                i8::try_from(v)
                    .map_err(|_| Error::invalid(format!("product entry {v} outside {{-1,0,1}}")))
                    .and_then(check_entry)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Exact integer product with 64-bit entries, row-major.
    pub fn matmul_wide(&self, other: &Matrix) -> Result<Vec<i64>> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let bt = other.transpose();
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let a = self.row(i);
            for j in 0..other.cols {
                out.push(dot(a, bt.row(j)));
            }
        }
        Ok(out)
    }

    /// `self * self^T` with 64-bit entries, row-major.
    pub fn gram(&self) -> Vec<i64> {
        let n = self.rows;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let d = dot(self.row(i), self.row(j));
                out[i * n + j] = d;
                out[j * n + i] = d;
            }
        }
        out
    }

    /// Reverses the column order, i.e. right multiplication by the back identity.
    pub fn reverse_cols(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, self.cols - 1 - j))
            .expect("entries already ternary")
    }

    pub fn is_sign_matrix(&self) -> bool {
        self.data.iter().all(|&v| v == 1 || v == -1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// True when `self - I` is skew-symmetric (diagonal all +1 is implied).
    pub fn is_skew_type(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i) == 1 && (0..i).all(|j| self.get(i, j) == -self.get(j, i))
            })
    }

    /// Is every row a right rotation of the previous one?
    pub fn is_circulant(&self) -> bool {
        let n = self.rows;
        self.is_square()
            && (1..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(0, (j + n - i) % n)))
    }
}

#[inline]
pub(crate) fn dot(a: &[i8], b: &[i8]) -> i64 {
    // i32 accumulation vectorises well; rows never exceed a few thousand entries.
    a.iter().zip(b).map(|(&x, &y)| (x as i32) * (y as i32)).sum::<i32>() as i64
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for &v in self.row(i) {
                f.write_str(match v {
                    1 => "+",
                    -1 => "-",
                    _ => "0",
                })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Square matrix with every entry exactly -1 or +1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignMatrix(Matrix);

impl SignMatrix {
    pub fn into_inner(self) -> Matrix {
        self.0
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }
}

impl TryFrom<Matrix> for SignMatrix {
    type Error = Error;

    fn try_from(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "sign matrix must be square, got {}x{}",
                m.rows, m.cols
            )));
        }
        if let Some(pos) = m.data.iter().position(|&v| v == 0) {
            return Err(Error::invalid(format!(
                "zero entry at ({}, {}) in a sign matrix",
                pos / m.cols,
                pos % m.cols
            )));
        }
        Ok(SignMatrix(m))
    }
}

impl Deref for SignMatrix {
    type Target = Matrix;

    fn deref(&self) -> &Matrix {
        &self.0
    }
}

impl From<SignMatrix> for Matrix {
    fn from(s: SignMatrix) -> Matrix {
        s.0
    }
}

/// Circulant matrix whose row `i` is `first_row` rotated right by `i`.
pub fn circulant(first_row: &[i8]) -> Result<Matrix> {
    let n = first_row.len();
    if n == 0 {
        return Err(Error::invalid("circulant of an empty row"));
    }
    Matrix::from_fn(n, n, |i, j| first_row[(j + n - i) % n])
}

/// Permutation matrix with ones on the anti-diagonal.
pub fn back_identity(n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::invalid("back identity of order 0"));
    }
    Matrix::from_fn(n, n, |i, j| i8::from(i + j == n - 1))
}

/// Kronecker product: block `(i, j)` of the result is `a[i][j] * b`.
pub fn tensor(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = vec![0i8; rows * cols];
    for ai in 0..a.rows {
        for aj in 0..a.cols {
            let s = a.get(ai, aj);
            if s == 0 {
                continue;
            }
            for bi in 0..b.rows {
                let base = (ai * b.rows + bi) * cols + aj * b.cols;
                for (k, &v) in b.row(bi).iter().enumerate() {
                    data[base + k] = s * v;
                }
            }
        }
    }
    Matrix { rows, cols, data }
}
