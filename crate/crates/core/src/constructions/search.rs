use std::collections::HashMap;

use super::quads::{paf, GoodQuad, WilliamsonQuad};
use crate::error::{Error, Result};
use crate::galois::field;

/// Turyn's Williamson quadruple of order `(q + 1) / 2` for a prime power
/// `q = 1 mod 4`.
///
/// The symmetric conference matrix on the projective line over GF(q), with
/// points `w^i` for a primitive `w` of GF(q^2), splits along the parity of
/// `i` into circulant blocks `[[U, V], [V^T, -U]]` after the sign change
/// `(-1)^{floor(i/2)}`. Then `A = U + I`, `B = U - I` and `C = D` is a
/// rotation of `V` that is symmetric.
pub fn turyn_williamson(q: u64) -> Result<WilliamsonQuad> {
    if q % 4 != 1 {
        return Err(Error::NotApplicable(format!("Turyn's construction needs q = 1 mod 4, got {q}")));
    }
    let big = field(q.checked_mul(q).ok_or_else(|| Error::invalid("q is too large"))?)?;
    let n = q.div_ceil(2) as usize;
    // GF(q)* is the set of powers of w^{q+1}; delta = w^{(q+1)/2} has
    // delta^q = -delta, so f(x, y) / delta lies in GF(q).
    let q1 = q + 1;
    let pts: Vec<u32> = (0..q1).map(|i| big.exp(i)).collect();
    let frob = |x: u32| big.pow(x, q);
    let chi = |i: usize, j: usize| -> i8 {
        let (x, y) = (pts[i], pts[j]);
        let f = big.sub(big.mul(x, frob(y)), big.mul(frob(x), y));
        match big.log(f) {
            None => 0,
            Some(l) => {
                let l = (l as u64 + (q * q - 1) - q1 / 2) % (q * q - 1);
                debug_assert_eq!(l % q1, 0);
                if (l / q1).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        }
    };
    let sign = |b: usize| if b.is_multiple_of(2) { 1 } else { -1 };
    let u: Vec<i8> = (0..n).map(|b| sign(b) * chi(0, 2 * b)).collect();
    let v: Vec<i8> = (0..n).map(|b| sign(b) * chi(0, 2 * b + 1)).collect();
    let w = (0..n)
        .map(|k| (0..n).map(|j| v[(j + k) % n]).collect::<Vec<i8>>())
        .find(|w| (1..n).all(|j| w[j] == w[n - j]))
        .ok_or_else(|| Error::check("Turyn construction", "no rotation of V is symmetric"))?;
    let mut a = u.clone();
    let mut b = u;
    a[0] = 1;
    b[0] = -1;
    WilliamsonQuad::new([a, b, w.clone(), w])
}

/// One candidate first row with its autocorrelation and spectrum.
struct Cand {
    row: Vec<i8>,
    paf: Vec<i8>,
    psd: Vec<f64>,
    sum: i64,
}

fn cand(row: Vec<i8>) -> Cand {
    let n = row.len();
    let h = n / 2;
    let paf = (1..=h).map(|k| paf(&row, k) as i8).collect();
    let psd = (1..=h)
        .map(|f| {
            let (mut re, mut im) = (0.0, 0.0);
            for (k, &x) in row.iter().enumerate() {
                let t = std::f64::consts::TAU * (f * k) as f64 / n as f64;
                re += x as f64 * t.cos();
                im += x as f64 * t.sin();
            }
            re * re + im * im
        })
        .collect();
    let sum = row.iter().map(|&x| x as i64).sum();
    Cand { row, paf, psd, sum }
}

/// All rows of odd length `n` with `x_0 = 1` and `x_{n-k} = sign * x_k`.
fn rows_with_symmetry(n: usize, sign: i8, bound: f64) -> Vec<Cand> {
    let h = n / 2;
    (0u64..1 << h)
        .map(|bits| {
            let mut row = vec![1i8; n];
            for k in 1..=h {
                let x = if bits >> (k - 1) & 1 == 1 { -1 } else { 1 };
                row[k] = x;
                row[n - k] = sign * x;
            }
            cand(row)
        })
        .filter(|c| c.psd.iter().all(|&p| p <= bound))
        .collect()
}

const EPS: f64 = 1e-6;

/// Ways to write `total` as `fixed` plus three or four odd squares, as
/// non-decreasing tuples of absolute row sums.
fn row_sum_splits(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn go(rest: i64, parts: usize, min: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let mut s = min;
        while s * s * parts as i64 <= rest {
            acc.push(s);
            go(rest - s * s, parts - 1, s, acc, out);
            acc.pop();
            s += 2;
        }
    }
    let mut out = Vec::new();
    go(total, parts, 1, &mut Vec::new(), &mut out);
    out
}

struct Meet<'a> {
    bound: f64,
    budget: u64,
    work: u64,
    lists: [Vec<&'a Cand>; 4],
}

impl Meet<'_> {
    fn spend(&mut self, n: u64) -> Result<()> {
        self.work += n;
        if self.work > self.budget {
            Err(Error::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    fn run(&mut self) -> Result<Option<[Vec<i8>; 4]>> {
        let fits = |x: &Cand, y: &Cand, bound: f64| x.psd.iter().zip(&y.psd).all(|(a, b)| a + b <= bound);
        let mut left: HashMap<Vec<i8>, (usize, usize)> = HashMap::new();
        let (l0, l1) = (self.lists[0].len(), self.lists[1].len());
        self.spend((l0 * l1) as u64)?;
        for (i, x) in self.lists[0].iter().enumerate() {
            for (j, y) in self.lists[1].iter().enumerate() {
                if fits(x, y, self.bound) {
                    let key: Vec<i8> = x.paf.iter().zip(&y.paf).map(|(a, b)| a + b).collect();
                    left.entry(key).or_insert((i, j));
                }
            }
        }
        let (l2, l3) = (self.lists[2].len(), self.lists[3].len());
        self.spend((l2 * l3) as u64)?;
        for z in &self.lists[2] {
            for w in &self.lists[3] {
                if !fits(z, w, self.bound) {
                    continue;
                }
                let key: Vec<i8> = z.paf.iter().zip(&w.paf).map(|(a, b)| -(a + b)).collect();
                if let Some(&(i, j)) = left.get(&key) {
                    return Ok(Some([
                        self.lists[0][i].row.clone(),
                        self.lists[1][j].row.clone(),
                        z.row.clone(),
                        w.row.clone(),
                    ]));
                }
            }
        }
        Ok(None)
    }
}

fn by_abs_sum(list: &[Cand], s: i64) -> Vec<&Cand> {
    list.iter().filter(|c| c.sum.abs() == s).collect()
}

/// Meet-in-the-middle search for symmetric circulant Williamson matrices of
/// odd order `n`. `Ok(None)` means the search space holds none; `budget`
/// bounds the number of candidate pairs examined.
pub fn search_williamson(n: usize, budget: u64) -> Result<Option<WilliamsonQuad>> {
    if n.is_multiple_of(2) || n == 0 || n > 61 {
        return Err(Error::invalid("Williamson search covers odd n up to 61"));
    }
    let bound = 4.0 * n as f64 + EPS;
    let sym = rows_with_symmetry(n, 1, bound);
    let mut work = 0;
    for split in row_sum_splits(4 * n as i64, 4) {
        let lists = [0, 1, 2, 3].map(|k| by_abs_sum(&sym, split[k]));
        let mut meet = Meet { bound, budget: budget.saturating_sub(work), work: 0, lists };
        let found = meet.run();
        work += meet.work;
        if let Some(rows) = found? {
            return WilliamsonQuad::new(rows).map(Some);
        }
    }
    Ok(None)
}

/// Meet-in-the-middle search for good matrices of odd order `n`.
pub fn search_good(n: usize, budget: u64) -> Result<Option<GoodQuad>> {
    if n.is_multiple_of(2) || n == 0 || n > 61 {
        return Err(Error::invalid("good-matrix search covers odd n up to 61"));
    }
    let bound = 4.0 * n as f64 + EPS;
    let skew = rows_with_symmetry(n, -1, bound);
    let sym = rows_with_symmetry(n, 1, bound);
    let mut work = 0;
    for split in row_sum_splits(4 * n as i64 - 1, 3) {
        // A pairs with the largest class so the stored side stays small.
        let lists = [
            skew.iter().collect(),
            by_abs_sum(&sym, split[2]),
            by_abs_sum(&sym, split[0]),
            by_abs_sum(&sym, split[1]),
        ];
        let mut meet = Meet { bound, budget: budget.saturating_sub(work), work: 0, lists };
        let found = meet.run();
        work += meet.work;
        if let Some([a, b, c, d]) = found? {
            return GoodQuad::new([a, b, c, d]).map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turyn_quads() {
        for q in [5u64, 9, 13, 17, 25, 29, 37, 49] {
            let w = turyn_williamson(q).unwrap();
            assert_eq!(w.n() as u64, q.div_ceil(2));
        }
        assert!(turyn_williamson(7).is_err());
    }

    #[test]
    fn splits() {
        assert_eq!(row_sum_splits(12, 4), vec![vec![1, 1, 1, 3]]);
        assert_eq!(row_sum_splits(11, 3), vec![vec![1, 1, 3]]);
    }

    #[test]
    fn small_searches() {
        for n in [1, 3, 5, 7, 9, 11, 13] {
            let w = search_williamson(n, 1 << 30).unwrap().unwrap();
            assert_eq!(w.n(), n);
            let g = search_good(n, 1 << 30).unwrap().unwrap();
            assert_eq!(g.n(), n);
        }
        assert!(matches!(search_williamson(13, 3), Err(Error::BudgetExhausted(_))));
    }
}
