use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{circulant, gram_sum_is_scalar, Matrix};

/// Periodic autocorrelation `sum_i x_i x_{i+k mod n}`.
pub(crate) fn paf(x: &[i8], k: usize) -> i64 {
    let n = x.len();
    (0..n).map(|i| (x[i] * x[(i + k) % n]) as i64).sum()
}

fn is_symmetric_row(x: &[i8]) -> bool {
    let n = x.len();
    (1..n).all(|k| x[k] == x[n - k])
}

fn is_skew_type_row(x: &[i8]) -> bool {
    let n = x.len();
    x[0] == 1 && (1..n).all(|k| x[k] == -x[n - k])
}

fn check_rows(rows: &[Vec<i8>; 4]) -> Result<usize> {
    let n = rows[0].len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("first rows must share a positive length"));
    }
    if rows.iter().flatten().any(|&v| v != 1 && v != -1) {
        return Err(Error::invalid("first rows must be +-1"));
    }
    let total: i64 = (1..n).map(|k| rows.iter().map(|r| paf(r, k)).sum::<i64>()).map(i64::abs).sum();
    if total != 0 {
        return Err(Error::check("circulant quadruple", "periodic autocorrelations do not cancel"));
    }
    Ok(n)
}

/// Four symmetric circulant `+-1` matrices with `A^2 + B^2 + C^2 + D^2 = 4nI`,
/// stored by first rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuadRepr", into = "QuadRepr")]
pub struct WilliamsonQuad {
    rows: [Vec<i8>; 4],
}

#[derive(Serialize, Deserialize)]
struct QuadRepr {
    n: usize,
    rows: [Vec<i8>; 4],
}

impl TryFrom<QuadRepr> for WilliamsonQuad {
    type Error = Error;
    fn try_from(r: QuadRepr) -> Result<Self> {
        let q = WilliamsonQuad::new(r.rows)?;
        if q.n() != r.n {
            return Err(Error::invalid(format!("declared n = {} but rows have length {}", r.n, q.n())));
        }
        Ok(q)
    }
}

impl From<WilliamsonQuad> for QuadRepr {
    fn from(q: WilliamsonQuad) -> Self {
        QuadRepr { n: q.n(), rows: q.rows }
    }
}

impl WilliamsonQuad {
    pub fn new(rows: [Vec<i8>; 4]) -> Result<Self> {
        check_rows(&rows)?;
        if let Some(k) = rows.iter().position(|r| !is_symmetric_row(r)) {
            return Err(Error::check("Williamson quadruple", format!("matrix {k} is not symmetric")));
        }
        Ok(WilliamsonQuad { rows })
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i8>; 4] {
        &self.rows
    }

    pub fn matrices(&self) -> [Matrix; 4] {
        self.rows.clone().map(|r| circulant(&r).expect("rows are non-empty"))
    }
}

/// Circulant `+-1` quadruple with `A - I` skew, `B, C, D` symmetric and
/// Gram sum `4nI`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuadRepr", into = "QuadRepr")]
pub struct GoodQuad {
    rows: [Vec<i8>; 4],
}

impl TryFrom<QuadRepr> for GoodQuad {
    type Error = Error;
    fn try_from(r: QuadRepr) -> Result<Self> {
        let q = GoodQuad::new(r.rows)?;
        if q.n() != r.n {
            return Err(Error::invalid(format!("declared n = {} but rows have length {}", r.n, q.n())));
        }
        Ok(q)
    }
}

impl From<GoodQuad> for QuadRepr {
    fn from(q: GoodQuad) -> Self {
        QuadRepr { n: q.n(), rows: q.rows }
    }
}

impl GoodQuad {
    pub fn new(rows: [Vec<i8>; 4]) -> Result<Self> {
        let n = check_rows(&rows)?;
        if n % 2 == 0 {
            return Err(Error::invalid("good matrices have odd order"));
        }
        if !is_skew_type_row(&rows[0]) {
            return Err(Error::check("good matrices", "A - I is not skew"));
        }
        if let Some(k) = rows[1..].iter().position(|r| !is_symmetric_row(r)) {
            return Err(Error::check("good matrices", format!("matrix {} is not symmetric", k + 1)));
        }
        let m = rows.clone().map(|r| circulant(&r).expect("non-empty"));
        debug_assert!(gram_sum_is_scalar(&[&m[0], &m[1], &m[2], &m[3]], 4 * n as i64));
        Ok(GoodQuad { rows })
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i8>; 4] {
        &self.rows
    }

    pub fn matrices(&self) -> [Matrix; 4] {
        self.rows.clone().map(|r| circulant(&r).expect("rows are non-empty"))
    }
}
