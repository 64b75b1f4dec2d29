use crate::error::{Error, Result};
use crate::exactmat::{is_hadamard, is_skew_hadamard, Matrix, SignMatrix};
use crate::galois::{field, FieldCtx};

fn odd_field(q: u64) -> Result<std::sync::Arc<FieldCtx>> {
    if q.is_multiple_of(2) {
        return Err(Error::invalid(format!("q = {q} must be odd")));
    }
    field(q)
}

/// `S_ij = chi(a_j - a_i)` over the field codes `0..q`.
pub(crate) fn jacobsthal(f: &FieldCtx) -> Matrix {
    let q = f.order() as usize;
    Matrix::from_fn(q, q, |i, j| f.chi(f.sub(j as u32, i as u32)))
        .expect("characters are ternary")
}

/// Bordered `[[0, e], [+-e^T, S]]`: symmetric for `q = 1 mod 4`, skew for
/// `q = 3 mod 4`.
pub fn conference_paley(q: u64) -> Result<Matrix> {
    let f = odd_field(q)?;
    let s = jacobsthal(&f);
    let col = if q % 4 == 1 { 1 } else { -1 };
    let n = q as usize + 1;
    Matrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) => 1,
        (_, 0) => col,
        _ => s.get(i - 1, j - 1),
    })
}

/// Skew Hadamard matrix `[[1, e], [-e^T, S + I]]` of order `q + 1`,
/// `q = 3 mod 4`.
pub fn paley_i(q: u64) -> Result<SignMatrix> {
    if q % 4 != 3 {
        return Err(Error::NotApplicable(format!("Paley I needs q = 3 mod 4, got {q}")));
    }
    let c = conference_paley(q)?;
    let n = c.order();
    Matrix::from_fn(n, n, |i, j| if i == j { 1 } else { c.get(i, j) })?.try_into()
}

/// Hadamard matrix of order `2(q + 1)`, `q = 1 mod 4`, from the symmetric
/// conference matrix `C` as `C x [[1,1],[1,-1]] + I x [[1,-1],[-1,-1]]`.
pub fn paley_ii(q: u64) -> Result<SignMatrix> {
    if q % 4 != 1 {
        return Err(Error::NotApplicable(format!("Paley II needs q = 1 mod 4, got {q}")));
    }
    let c = conference_paley(q)?;
    let n = c.order();
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        let (bi, bj, ri, rj) = (i / 2, j / 2, i % 2, j % 2);
        if bi == bj {
            if ri == 0 && rj == 0 {
                1
            } else {
                -1
            }
        } else {
            let v = c.get(bi, bj);
            if ri == 1 && rj == 1 {
                -v
            } else {
                v
            }
        }
    })?
    .try_into()
}

/// `[[H, H], [H, -H]]`, or for a skew `H = S + I` the skew matrix
/// `[[S + I, S + I], [S - I, -S + I]]`.
pub fn double(h: &Matrix, skew: bool) -> Result<SignMatrix> {
    let ok = if skew {
        is_skew_hadamard(h, false)
    } else {
        is_hadamard(h, false)
    };
    if !ok {
        let what = if skew { "skew Hadamard" } else { "Hadamard" };
        return Err(Error::invalid(format!("doubling input is not {what}")));
    }
    let n = h.order();
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        let v = h.get(i % n, j % n);
        match (i >= n, j >= n) {
            (false, _) => v,
            (true, false) if skew && i - n == j => -v,
            (true, false) => v,
            (true, true) if skew && i == j => v,
            (true, true) => -v,
        }
    })?
    .try_into()
}
