use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::matrix::Matrix;

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &Matrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.order();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// `|det H| == n^(n/2)` in exact arithmetic.
pub fn abs_det_is_maximal(h: &Matrix) -> bool {
    if !h.is_square() {
        return false;
    }
    let n = h.order();
    let det = determinant(h).abs();
    // |det|^2 = n^n avoids the half power for odd n.
    &det * &det == BigInt::from(n).pow(n as u32)
}
