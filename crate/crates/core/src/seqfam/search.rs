use std::collections::HashMap;

use super::family::{npaf, SeqFamily, SeqKind};
use crate::error::{Error, Result};

/// All `+-1` sequences of length `len` whose entry `i` is fixed to `v` for
/// every `(i, v)` in `fixed`, with an optional reversal symmetry
/// `s_{len-1-i} = sym * s_i`.
fn sequences(len: usize, fixed: &[(usize, i8)], sym: Option<i8>) -> Vec<Vec<i8>> {
    let free: Vec<usize> = match sym {
        Some(_) => (0..len.div_ceil(2)).collect(),
        None => (0..len).collect(),
    };
    let mut out = Vec::new();
    for bits in 0u64..1 << free.len() {
        let mut s = vec![0i8; len];
        for (k, &i) in free.iter().enumerate() {
            s[i] = if bits >> k & 1 == 1 { -1 } else { 1 };
        }
        if let Some(sign) = sym {
            for i in 0..len / 2 {
                s[len - 1 - i] = sign * s[i];
            }
            if len % 2 == 1 && sign == -1 {
                continue;
            }
        }
        if fixed.iter().all(|&(i, v)| s[i] == v) {
            out.push(s);
        }
    }
    out
}

fn key(parts: &[&[i8]], weights: &[i64], shifts: usize, negate: bool) -> Vec<i64> {
    (1..=shifts)
        .map(|j| {
            let v: i64 = parts.iter().zip(weights).map(|(s, w)| w * npaf(s, j)).sum();
            if negate {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// Odd-shift autocorrelations of the interleaving `A/Y` vanish.
fn interleave_balanced(a: &[i8], y: &[i8]) -> bool {
    (0..a.len()).all(|j| {
        let first: i64 = (0..a.len()).filter(|i| i + j < y.len()).map(|i| (a[i] * y[i + j]) as i64).sum();
        let second: i64 = (0..y.len()).filter(|i| i + j + 1 < a.len()).map(|i| (y[i] * a[i + j + 1]) as i64).sum();
        first + second == 0
    })
}

/// Partial correlation sums mapped to the sequence pairs that produce them.
type HalfTable = HashMap<Vec<i64>, Vec<(Vec<i8>, Vec<i8>)>>;

/// Meet-in-the-middle search for Turyn sequences of length `l`.
///
/// The pair that is interleaved in the `4l - 1` construction is restricted
/// to one of the two reversal symmetries that make its odd shifts cancel;
/// every hit is accepted only after full verification.
pub fn search_turyn(l: usize, budget: u64) -> Result<Option<SeqFamily>> {
    if !(2..=20).contains(&l) {
        return Err(Error::invalid("Turyn search covers 2 <= l <= 20"));
    }
    let mut spent = 0u64;
    let x_ends = [(0, 1), (l - 1, -1)];
    let u_end = [(l - 1, 1)];
    for a_is_x in [true, false] {
        for (sym_a, sym_y) in [(-1, 1), (1, -1)] {
            let a_fixed: &[(usize, i8)] = if a_is_x { &x_ends } else { &u_end };
            let b_fixed: &[(usize, i8)] = if a_is_x { &u_end } else { &x_ends };
            let mut left: HalfTable = HashMap::new();
            for a in sequences(l, a_fixed, Some(sym_a)) {
                for y in sequences(l - 1, &[(0, 1)], Some(sym_y)) {
                    if interleave_balanced(&a, &y) {
                        let k = key(&[&a, &y], &[1, 1], l - 1, false);
                        left.entry(k).or_default().push((a.clone(), y));
                    }
                }
            }
            if left.is_empty() {
                continue;
            }
            let vs = sequences(l - 1, &[(0, 1)], None);
            let v_keys: Vec<Vec<i64>> = vs.iter().map(|v| key(&[v], &[1], l - 1, false)).collect();
            for b in sequences(l, b_fixed, None) {
                let kb = key(&[&b], &[1], l - 1, false);
                for (v, kv) in vs.iter().zip(&v_keys) {
                    spent += 1;
                    if spent > budget {
                        return Err(Error::BudgetExhausted(budget));
                    }
                    let target: Vec<i64> = kb.iter().zip(kv).map(|(p, q)| -(p + q)).collect();
                    for (a, y) in left.get(&target).into_iter().flatten() {
                        let (x, u) = if a_is_x { (a, &b) } else { (&b, a) };
                        let members = vec![x.clone(), u.clone(), y.clone(), v.clone()];
                        if let Ok(f) = SeqFamily::new(SeqKind::Turyn, members) {
                            return Ok(Some(f));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Meet-in-the-middle search for Turyn-type sequences `X, Y, Z, W` of
/// lengths `n, n, n, n - 1`, each normalized to start with `+1`.
pub fn search_turyn_type(n: usize, budget: u64) -> Result<Option<SeqFamily>> {
    if !(2..=11).contains(&n) {
        return Err(Error::invalid("Turyn-type search covers 2 <= n <= 11"));
    }
    let head = [(0, 1)];
    let full = sequences(n, &head, None);
    let short = sequences(n - 1, &head, None);
    let mut left: HashMap<Vec<i64>, (usize, usize)> = HashMap::new();
    for (i, x) in full.iter().enumerate() {
        for (j, y) in full.iter().enumerate().skip(i) {
            left.entry(key(&[x, y], &[1, 1], n - 1, false)).or_insert((i, j));
        }
    }
    let mut spent = 0u64;
    for z in &full {
        for w in &short {
            spent += 1;
            if spent > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            if let Some(&(i, j)) = left.get(&key(&[z, w], &[2, 2], n - 1, true)) {
                let members = vec![full[i].clone(), full[j].clone(), z.clone(), w.clone()];
                return SeqFamily::new(SeqKind::TurynType, members).map(Some);
            }
        }
    }
    Ok(None)
}
