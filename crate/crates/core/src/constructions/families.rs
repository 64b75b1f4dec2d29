use super::arrays::{gs_array, williamson_array};
use super::quads::{GoodQuad, WilliamsonQuad};
use super::search::{search_good, search_williamson, turyn_williamson};
use crate::arith::{divisors, is_prime_power};
use crate::catalog::{self, Catalog};
use crate::error::{Error, Result};
use crate::exactmat::{are_t_matrices, circulant, tensor, Matrix, SignMatrix};

/// Orders at or below this are searched on demand when no record is shipped.
pub const SEARCH_LIMIT: usize = 13;
const SEARCH_BUDGET: u64 = 50_000_000;

fn turyn_applies(n: usize) -> bool {
    let q = 2 * n as u64 - 1;
    q % 4 == 1 && is_prime_power(q)
}

/// Whether [`williamson_quad`] succeeds for odd `n`.
pub fn williamson_available(cat: &Catalog, n: usize) -> bool {
    n % 2 == 1 && (cat.williamson.contains_key(&n) || turyn_applies(n) || n <= SEARCH_LIMIT)
}

/// Williamson matrices of odd order `n`: shipped record, Turyn's family for
/// `2n - 1` a prime power, or a search for small `n`.
pub fn williamson_quad(n: usize) -> Result<WilliamsonQuad> {
    let cat = catalog::global()?;
    if n.is_multiple_of(2) || n == 0 {
        return Err(Error::invalid(format!("Williamson matrices need odd n, got {n}")));
    }
    if let Some(q) = cat.williamson.get(&n) {
        return Ok(q.clone());
    }
    if turyn_applies(n) {
        return turyn_williamson(2 * n as u64 - 1);
    }
    if n <= SEARCH_LIMIT {
        if let Some(q) = search_williamson(n, SEARCH_BUDGET)? {
            return Ok(q);
        }
    }
    Err(Error::NotApplicable(format!("no Williamson matrices of order {n} available")))
}

/// Hadamard matrix of order `4n` from Williamson matrices of order `n`.
pub fn williamson_hadamard(n: usize) -> Result<SignMatrix> {
    let [a, b, c, d] = williamson_quad(n)?.matrices();
    williamson_array(&a, &b, &c, &d)?.try_into()
}

/// Whether [`good_quad`] succeeds for odd `n`.
pub fn good_available(cat: &Catalog, n: usize) -> bool {
    n % 2 == 1 && (cat.good.contains_key(&n) || n <= SEARCH_LIMIT)
}

/// Good matrices of odd order `n`.
pub fn good_quad(n: usize) -> Result<GoodQuad> {
    let cat = catalog::global()?;
    if n.is_multiple_of(2) || n == 0 {
        return Err(Error::invalid(format!("good matrices need odd n, got {n}")));
    }
    if let Some(q) = cat.good.get(&n) {
        return Ok(q.clone());
    }
    if n <= SEARCH_LIMIT {
        if let Some(q) = search_good(n, SEARCH_BUDGET)? {
            return Ok(q);
        }
    }
    Err(Error::NotApplicable(format!("no good matrices of order {n} available")))
}

/// Skew Hadamard matrix of order `4n` from good matrices in the
/// Goethals-Seidel array.
pub fn good_matrices_hadamard(n: usize) -> Result<SignMatrix> {
    let [a, b, c, d] = good_quad(n)?.matrices();
    gs_array(&a, &b, &c, &d)?.try_into()
}

/// The divisors `t` of `n` for which T-sequences of length `t` and
/// Williamson matrices of order `n / t` are both at hand, smallest first.
pub fn cooper_wallis_splits(cat: &Catalog, n: usize) -> Vec<usize> {
    if n.is_multiple_of(2) {
        return Vec::new();
    }
    divisors(n as u64)
        .into_iter()
        .map(|t| t as usize)
        .filter(|&t| cat.sequences.t_sequences(t).is_ok() && williamson_available(cat, n / t))
        .collect()
}

/// Hadamard matrix of order `4n` with `n = t w`: circulant T-matrices
/// `X_1..X_4` of order `t` fill four Goethals-Seidel arrays `E_1..E_4`,
/// and `H = sum E_i (x) W_i` over Williamson matrices `W_i` of order `w`.
pub fn cooper_wallis_with(t: usize, n: usize) -> Result<SignMatrix> {
    if t == 0 || !n.is_multiple_of(t) {
        return Err(Error::invalid(format!("{t} does not divide {n}")));
    }
    let cat = catalog::global()?;
    let seqs = cat.sequences.t_sequences(t)?;
    let x: Vec<Matrix> = seqs.members.iter().map(|m| circulant(m)).collect::<Result<_>>()?;
    if !are_t_matrices([&x[0], &x[1], &x[2], &x[3]]) {
        return Err(Error::check("T-matrices", "circulants of the T-sequences"));
    }
    let w = williamson_quad(n / t)?.matrices();
    let (x1, x2, x3, x4) = (&x[0], &x[1], &x[2], &x[3]);
    let e = [
        gs_array(x1, x2, x3, x4)?,
        gs_array(x2, &x1.neg(), x4, &x3.neg())?,
        gs_array(x3, &x4.neg(), &x1.neg(), x2)?,
        gs_array(x4, x3, &x2.neg(), &x1.neg())?,
    ];
    let mut h = tensor(&e[0], &w[0]);
    for (ei, wi) in e.iter().zip(&w).skip(1) {
        h = h.add(&tensor(ei, wi))?;
    }
    h.try_into()
}

/// [`cooper_wallis_with`] for the smallest usable `t`.
pub fn cooper_wallis(n: usize) -> Result<SignMatrix> {
    let cat = catalog::global()?;
    match cooper_wallis_splits(cat, n).first() {
        Some(&t) => cooper_wallis_with(t, n),
        None => Err(Error::NotApplicable(format!(
            "no T-sequences with Williamson cofactor available for n = {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{is_hadamard, is_skew_hadamard};

    #[test]
    fn small_families() {
        for n in [1, 3, 5, 7, 9, 11, 13] {
            assert!(is_hadamard(&williamson_hadamard(n).unwrap(), true), "n={n}");
            assert!(is_skew_hadamard(&good_matrices_hadamard(n).unwrap(), true), "n={n}");
        }
    }

    #[test]
    fn cooper_wallis_orders() {
        for (t, n) in [(3, 9), (5, 15), (7, 21), (13, 39), (1, 5)] {
            let h = cooper_wallis_with(t, n).unwrap();
            assert_eq!(h.order(), 4 * n);
            assert!(is_hadamard(&h, true), "t={t} n={n}");
        }
        assert!(cooper_wallis_with(4, 9).is_err());
    }
}
