use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::construct::{CosetSpec, SdsRecord};
use super::family::SubsetFamily;
use super::group::AbelianGroup;
use crate::arith::{gcd, prime_power};
use crate::error::{Error, Result};
use crate::galois::{field, FieldCtx};

/// The ring whose units act on the additive group: `Z_n` or GF(q).
enum Ring {
    Cyclic(u32),
    Field(Arc<FieldCtx>),
}

impl Ring {
    fn order(&self) -> u32 {
        match self {
            Ring::Cyclic(n) => *n,
            Ring::Field(f) => f.order(),
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Ring::Cyclic(n) => ((a as u64 * b as u64) % *n as u64) as u32,
            Ring::Field(f) => f.mul(a, b),
        }
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        match self {
            Ring::Cyclic(n) => (a + n - b) % n,
            Ring::Field(f) => f.sub(a, b),
        }
    }

    fn one(&self) -> u32 {
        match self {
            Ring::Cyclic(_) => 1,
            Ring::Field(f) => f.one().code(),
        }
    }

    fn is_unit(&self, a: u32) -> bool {
        match self {
            Ring::Cyclic(n) => gcd(a as u64, *n as u64) == 1,
            Ring::Field(_) => a != 0,
        }
    }
}

/// A union candidate: orbit-indexed difference counts and the atoms used.
type Candidate = (Vec<u16>, u64);

/// Searches for a `4-{n; k_1..k_4; lambda}` SDS with `sum k_i = n + lambda`
/// whose sets are unions of orbits of a cyclic multiplier group `H` on
/// `Z_n` (optionally with 0), skew in `S_1` when requested.
///
/// Subgroups are tried by increasing number of orbits; any subgroup whose
/// pairing step would exceed `budget` candidate pairs is skipped.
pub fn search_orbit_sds(n: u32, skew: bool, budget: u64) -> Result<Option<SdsRecord>> {
    if n < 3 || n.is_multiple_of(2) || n > 5000 {
        return Err(Error::invalid("orbit SDS search needs an odd group order 3 <= n <= 5000"));
    }
    let ring = Ring::Cyclic(n);
    for h in multiplier_groups(&ring, skew) {
        let at = atoms(&ring, &h);
        if let Some(masks) = search_with(&at, n, skew, budget) {
            let rec = record(n, &h, &at, masks, skew);
            if rec.build().is_ok() {
                return Ok(Some(rec));
            }
        }
    }
    Ok(None)
}

/// The same search on the additive group of GF(q), with `H` a subgroup of
/// the multiplicative group; the result is an explicit family over
/// `Z_p^m`.
pub fn search_field_orbit_sds(q: u64, skew: bool, budget: u64) -> Result<Option<SubsetFamily>> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q.is_multiple_of(2) || q > 5000 {
        return Err(Error::invalid("field orbit search needs an odd q <= 5000"));
    }
    let ring = Ring::Field(field(q)?);
    let group = AbelianGroup::elementary(p as u32, m);
    for h in multiplier_groups(&ring, skew) {
        let at = atoms(&ring, &h);
        if let Some(masks) = search_with(&at, q as u32, skew, budget) {
            let sets: Vec<Vec<u32>> = masks
                .iter()
                .map(|&mask| {
                    let mut s: Vec<u32> = (0..at.sets.len())
                        .filter(|&a| mask >> a & 1 == 1)
                        .flat_map(|a| at.sets[a].iter().copied())
                        .collect();
                    s.sort_unstable();
                    s
                })
                .collect();
            let total: u64 = sets.iter().map(|s| s.len() as u64).sum();
            let fam = SubsetFamily::new(group.clone(), sets, total - q)?;
            if !skew || fam.is_skew() {
                return Ok(Some(fam));
            }
        }
    }
    Ok(None)
}

/// Cyclic subgroups `<g>` of the units, fewest orbits first, with at most
/// 30 orbits; `-1` is excluded from `H` for skew searches.
fn multiplier_groups(ring: &Ring, skew: bool) -> Vec<Vec<u32>> {
    let n = ring.order();
    let one = ring.one();
    let minus_one = ring.sub(0, one);
    let mut seen = BTreeSet::new();
    for g in 1..n {
        if !ring.is_unit(g) {
            continue;
        }
        let mut h = vec![one];
        let mut x = g;
        while x != one {
            h.push(x);
            x = ring.mul(x, g);
        }
        h.sort_unstable();
        if skew && h.contains(&minus_one) {
            continue;
        }
        seen.insert(h);
    }
    let mut groups: Vec<Vec<u32>> = seen.into_iter().filter(|h| (n as usize - 1) / h.len() <= 30).collect();
    groups.sort_by_key(|h| std::cmp::Reverse(h.len()));
    groups
}

struct Atoms {
    /// Atom 0 is `{0}`; the rest are orbits.
    sets: Vec<Vec<u32>>,
    /// For each orbit atom, the index of its negative.
    neg: Vec<usize>,
    /// `(coset index, alpha index)` for each orbit atom.
    alpha: Vec<usize>,
    cosets: Vec<CosetSpec>,
    /// `pair[a][b]` counts `s - t` over `s in a, t in b`, per orbit representative.
    pair: Vec<Vec<Vec<u16>>>,
}

fn atoms(ring: &Ring, h: &[u32]) -> Atoms {
    let n = ring.order();
    let mut owner = vec![usize::MAX; n as usize];
    let mut sets: Vec<Vec<u32>> = vec![vec![0]];
    owner[0] = 0;
    for x in 1..n {
        if owner[x as usize] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<u32> = h.iter().map(|&k| ring.mul(k, x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            owner[y as usize] = sets.len();
        }
        sets.push(orbit);
    }
    let neg: Vec<usize> = sets.iter().map(|s| owner[ring.sub(0, s[0]) as usize]).collect();
    let mut alpha = vec![usize::MAX; sets.len()];
    let mut cosets = Vec::new();
    for a in 1..sets.len() {
        if alpha[a] != usize::MAX {
            continue;
        }
        alpha[a] = 2 * cosets.len();
        if neg[a] != a {
            alpha[neg[a]] = 2 * cosets.len() + 1;
        }
        cosets.push(CosetSpec::Multiplier(sets[a][0]));
    }
    let reps: Vec<u32> = sets.iter().skip(1).map(|s| s[0]).collect();
    let m = reps.len();
    let rep_index: HashMap<u32, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut pair = vec![vec![vec![0u16; m]; sets.len()]; sets.len()];
    for (a, sa) in sets.iter().enumerate() {
        for (b, sb) in sets.iter().enumerate() {
            for &s in sa {
                for &t in sb {
                    if let Some(&i) = rep_index.get(&ring.sub(s, t)) {
                        pair[a][b][i] += 1;
                    }
                }
            }
        }
    }
    Atoms { sets, neg, alpha, cosets, pair }
}

/// Odd `a_1 >= ... >= a_4 > 0` with `sum a_i^2 = 4n`; `a_1 = 1` first when skew.
fn square_splits(n: u32, skew: bool) -> Vec<[u32; 4]> {
    let target = 4 * n;
    let odd: Vec<u32> = (1..).step_by(2).take_while(|a| a * a <= target).collect();
    let mut out = Vec::new();
    for &a in &odd {
        for &b in odd.iter().filter(|&&b| b <= a) {
            for &c in odd.iter().filter(|&&c| c <= b) {
                let rest = target as i64 - (a * a + b * b + c * c) as i64;
                if rest <= 0 {
                    continue;
                }
                let d = (rest as f64).sqrt().round() as u32;
                if d * d == rest as u32 && d % 2 == 1 && d <= c {
                    if skew {
                        if d == 1 {
                            out.push([1, a, b, c]);
                        }
                    } else {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn unions(at: &Atoms, size: usize, skew: bool, cap: usize) -> Option<Vec<Candidate>> {
    let m = at.pair[0][0].len();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        at: &Atoms,
        idx: usize,
        left: usize,
        mask: u64,
        counts: &mut Vec<u16>,
        skew: bool,
        out: &mut Vec<Candidate>,
        cap: usize,
    ) -> bool {
        let count = at.sets.len();
        if left == 0 {
            if skew && (1..count).any(|a| (mask >> a & 1 == 0) && (mask >> at.neg[a] & 1 == 0)) {
                return true;
            }
            out.push((counts.clone(), mask));
            return out.len() <= cap;
        }
        if idx == count {
            return true;
        }
        let take_ok = at.sets[idx].len() <= left
            && !(skew && (idx == 0 || at.neg[idx] == idx || (at.neg[idx] < idx && mask >> at.neg[idx] & 1 == 1)));
        if take_ok {
            let saved = counts.clone();
            for (i, slot) in counts.iter_mut().enumerate() {
                let mut add = at.pair[idx][idx][i];
                for b in 0..count {
                    if mask >> b & 1 == 1 {
                        add += at.pair[idx][b][i] + at.pair[b][idx][i];
                    }
                }
                *slot += add;
            }
            if !rec(at, idx + 1, left - at.sets[idx].len(), mask | 1 << idx, counts, skew, out, cap) {
                return false;
            }
            *counts = saved;
        }
        let must_take = skew && idx > 0 && at.neg[idx] < idx && mask >> at.neg[idx] & 1 == 0;
        if !must_take {
            return rec(at, idx + 1, left, mask, counts, skew, out, cap);
        }
        true
    }
    let mut counts = vec![0u16; m];
    rec(at, 0, size, 0, &mut counts, skew, &mut out, cap).then_some(out)
}

/// Atom masks of the four sets, if the pairing step finds a match.
fn search_with(at: &Atoms, n: u32, skew: bool, budget: u64) -> Option<[u64; 4]> {
    if at.sets.len() > 63 || (skew && (1..at.sets.len()).any(|a| at.neg[a] == a)) {
        return None;
    }
    let cap = budget.min(usize::MAX as u64) as usize;
    for split in square_splits(n, skew) {
        let ks: Vec<usize> = split.iter().map(|&a| ((n - a) / 2) as usize).collect();
        let lists: Option<Vec<Vec<Candidate>>> =
            (0..4).map(|i| unions(at, ks[i], skew && i == 0, cap)).collect();
        let Some(lists) = lists else { continue };
        if lists.iter().any(Vec::is_empty) {
            continue;
        }
        let right_size = lists[2].len() as u64 * lists[3].len() as u64;
        let left_size = lists[0].len() as u64 * lists[1].len() as u64;
        if right_size > budget || left_size > budget.saturating_mul(8) {
            continue;
        }
        let lambda: u16 = (ks.iter().sum::<usize>() - n as usize) as u16;
        let mut table: HashMap<Vec<u16>, (usize, usize)> = HashMap::new();
        for (i3, (c3, _)) in lists[2].iter().enumerate() {
            for (i4, (c4, _)) in lists[3].iter().enumerate() {
                let key: Vec<u16> = c3.iter().zip(c4).map(|(a, b)| a + b).collect();
                table.entry(key).or_insert((i3, i4));
            }
        }
        for (c1, m1) in &lists[0] {
            for (c2, m2) in &lists[1] {
                let need: Option<Vec<u16>> =
                    c1.iter().zip(c2).map(|(a, b)| lambda.checked_sub(a + b)).collect();
                let Some(need) = need else { continue };
                if let Some(&(i3, i4)) = table.get(&need) {
                    return Some([*m1, *m2, lists[2][i3].1, lists[3][i4].1]);
                }
            }
        }
    }
    None
}

fn record(n: u32, h: &[u32], at: &Atoms, masks: [u64; 4], skew: bool) -> SdsRecord {
    let j = masks.map(|mask| {
        (1..at.sets.len()).filter(|&a| mask >> a & 1 == 1).map(|a| at.alpha[a]).collect::<Vec<_>>()
    });
    SdsRecord {
        n,
        h: h.to_vec(),
        cosets: at.cosets.clone(),
        j,
        add_zero: masks.map(|mask| mask & 1 == 1),
        skew,
        source: "orbit search".into(),
    }
}
