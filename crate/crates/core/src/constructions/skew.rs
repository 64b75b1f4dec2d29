use std::collections::BTreeSet;

use super::arrays::{gs_array, set_matrix};
use super::bordered::BorderedArray;
use crate::diffsets::{cds, singer_difference_set, spence_sds, AbelianGroup, CdsPair, CdsVariant};
use crate::error::{Error, Result};
use crate::exactmat::{back_identity, is_hadamard, is_skew_hadamard, Matrix, SignMatrix};

const SPENCE_PRINTED: [[i8; 8]; 8] = [
    [1, -1, 1, 1, 1, 1, 1, 1],
    [1, 1, -1, 1, -1, 1, -1, 1],
    [-1, 1, 1, 1, -1, 1, 1, -1],
    [-1, -1, -1, 1, -1, -1, 1, 1],
    [-1, 1, 1, -1, 1, 1, 1, 1],
    [-1, -1, 1, 1, -1, 1, -1, 1],
    [-1, -1, -1, -1, -1, 1, 1, -1],
    [1, -1, 1, -1, -1, -1, 1, 1],
];

/// Hadamard matrix of order `4(2v + 1)` from the `4-{2v; v, v, v, v+1; 2v}`
/// SDS of [`spence_sds`] with `q = 2v + 1`.
///
/// `(A_l)_ij = +1` when `i - j` lies in `S_l`, and `P` is the back
/// identity. Border and block signs start from the classical layout. Any
/// block row whose cross products fail to cancel is repaired by the same
/// backtracking used for the Miyamoto array.
pub fn spence_hadamard(v: u64) -> Result<SignMatrix> {
    let family = spence_sds(2 * v + 1)?;
    let group = family.group.clone();
    let [p1, p2, x, y] = <[Vec<u32>; 4]>::try_from(family.sets.clone())
        .map_err(|_| Error::check("Spence SDS", "expected four sets"))?;
    let base = [p1, x, y, p2];
    let perms = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]];
    for perm in perms {
        let sets: Vec<&[u32]> = perm.iter().map(|&i| base[i].as_slice()).collect();
        let array = spence_array(&group, &sets)?;
        if let Some(signs) = array.solve() {
            let h = array.assemble(&signs)?;
            if is_hadamard(&h, false) {
                return h.try_into();
            }
        }
    }
    Err(Error::check(format!("Spence array v={v}"), "no sign layout closes"))
}

fn spence_array(group: &AbelianGroup, sets: &[&[u32]]) -> Result<BorderedArray> {
    let n = group.order() as usize;
    let p = back_identity(n)?;
    let a: Vec<Matrix> = sets.iter().map(|s| set_matrix(group, s, 1, false)).collect();
    let ap = |k: usize| a[k].matmul(&p);
    let atp = |k: usize| a[k].transpose().matmul(&p);
    let body = [
        [a[0].clone(), ap(1)?, ap(2)?, ap(3)?],
        [ap(1)?, a[0].clone(), atp(3)?, atp(2)?],
        [ap(2)?, atp(3)?, a[0].clone(), atp(1)?],
        [ap(3)?, atp(2)?, atp(1)?, a[0].clone()],
    ];
    let one = Matrix::filled(1, 1, 1)?;
    let row = Matrix::filled(1, n, 1)?;
    let col = row.transpose();
    let mut blocks = Vec::with_capacity(8);
    for r in 0..8 {
        let line: Vec<Matrix> = (0..8)
            .map(|c| match (r < 4, c < 4) {
                (true, true) => one.clone(),
                (true, false) => row.clone(),
                (false, true) => col.clone(),
                (false, false) => body[r - 4][c - 4].clone(),
            })
            .collect();
        blocks.push(line);
    }
    Ok(BorderedArray { blocks, reference: SPENCE_PRINTED })
}

/// Skew Hadamard matrix `I + S` of order `4(m + 1)` from complementary
/// difference sets over a group of order `2m + 1`, elements taken in
/// ascending encoding order.
pub fn cds_skew_hadamard(pair: &CdsPair) -> Result<SignMatrix> {
    pair.as_family()?;
    let g = &pair.group;
    let v = g.order() as usize;
    let n = 2 * v + 2;
    let (in_a, in_b) = (membership(v, &pair.a), membership(v, &pair.b));
    let sign = |b: bool| if b { 1 } else { -1 };
    let mut s = Matrix::zeros(n, n);
    for i in 0..v {
        for j in 0..v {
            let d = g.sub(j as u32, i as u32) as usize;
            if i != j {
                s.set(i, j, sign(in_a[d]))?;
                s.set(v + i, v + j, -sign(in_a[d]))?;
            }
            s.set(i, v + j, sign(in_b[d]))?;
            s.set(v + j, i, -sign(in_b[d]))?;
        }
    }
    for i in 0..2 * v {
        let x = if i < v { 1 } else { -1 };
        s.set(i, n - 2, x)?;
        s.set(n - 2, i, -x)?;
    }
    for i in 0..n - 1 {
        s.set(n - 1, i, 1)?;
        s.set(i, n - 1, -1)?;
    }
    let h = s.add(&Matrix::identity(n))?;
    if !is_skew_hadamard(&h, false) {
        return Err(Error::check(format!("CDS skew Hadamard of order {n}"), "checker rejected the result"));
    }
    h.try_into()
}

fn membership(v: usize, set: &[u32]) -> Vec<bool> {
    let mut m = vec![false; v];
    for &x in set {
        m[x as usize] = true;
    }
    m
}

/// Goethals-Seidel skew Hadamard matrix of order `4(1 + q + q^2)`.
///
/// A planar `(q^4+q^2+1, q^2+1, 1)` difference set fixed by `q` splits into
/// `D_1`, the elements divisible by `q^2 - q + 1`, and pairs congruent
/// modulo `v = 1 + q + q^2`; one residue per pair forms `D_2`. `R` and `S`
/// come from `D_1 + D_2` and `D_2`, `P` and `Q` from complementary
/// difference sets in `Z_v`. The array is `GS(-P, Q, R, S)`.
pub fn spence_skew(q: u64) -> Result<SignMatrix> {
    let v = 1 + q + q * q;
    let pair = cyclic_cds(v)?;
    let (d1, d2) = planar_split(q)?;
    let group = AbelianGroup::cyclic(v as u32);
    let to_u32 = |s: &BTreeSet<u64>| s.iter().map(|&x| x as u32).collect::<Vec<u32>>();
    let r_set: Vec<u32> = to_u32(&d1.union(&d2).copied().collect());
    let p = set_matrix(&group, &pair.a, 1, true);
    let qm = set_matrix(&group, &pair.b, 1, true);
    let r = set_matrix(&group, &r_set, 1, true);
    let s = set_matrix(&group, &to_u32(&d2), 1, true);
    let h = gs_array(&p.neg(), &qm, &r, &s)?;
    if !is_skew_hadamard(&h, false) {
        return Err(Error::check(format!("Spence skew q={q}"), "checker rejected the result"));
    }
    h.try_into()
}

/// `D_1` and `D_2` as residues modulo `1 + q + q^2`.
pub(crate) fn planar_split(q: u64) -> Result<(BTreeSet<u64>, BTreeSet<u64>)> {
    let v = 1 + q + q * q;
    let planar = singer_difference_set(q)?;
    let big = q * q * q * q + q * q + 1;
    let d = fixed_translate(&planar, big, q)
        .ok_or_else(|| Error::check("Spence skew", format!("no translate of the planar set is fixed by {q}")))?;
    let w = q * q - q + 1;
    let d1: BTreeSet<u64> = d.iter().filter(|&&x| x % w == 0).map(|&x| x % v).collect();
    let mut d2 = BTreeSet::new();
    let mut counts = vec![0u32; v as usize];
    for &x in d.iter().filter(|&&x| x % w != 0) {
        counts[(x % v) as usize] += 1;
        d2.insert(x % v);
    }
    if counts.iter().any(|&c| c != 0 && c != 2) {
        return Err(Error::check("Spence skew", "elements outside D_1 do not pair up modulo v"));
    }
    Ok((d1, d2))
}

/// Complementary difference sets over the cyclic group of order `v`.
/// Whether [`cyclic_cds`] succeeds for `v`.
pub(crate) fn cyclic_cds_exists(v: u64) -> bool {
    let prime = crate::arith::is_prime(v);
    (prime && v % 4 == 3) || (prime && v % 8 == 5) || (v % 2 == 1 && crate::arith::is_prime_power(2 * v + 1))
}

pub(crate) fn cyclic_cds(v: u64) -> Result<CdsPair> {
    CdsVariant::ALL
        .iter()
        .filter(|variant| variant.applies(v))
        .filter_map(|&variant| cds(v, Some(variant)).ok())
        .find(|pair| pair.group.is_cyclic())
        .ok_or_else(|| Error::NotApplicable(format!("no cyclic complementary difference sets of order {v}")))
}

fn fixed_translate(set: &[u64], n: u64, t: u64) -> Option<Vec<u64>> {
    (0..n).find_map(|g| {
        let shifted: BTreeSet<u64> = set.iter().map(|&x| (x + g) % n).collect();
        shifted
            .iter()
            .all(|&x| shifted.contains(&(x * t % n)))
            .then(|| shifted.into_iter().collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spence_small() {
        let h = spence_hadamard(8).unwrap();
        assert_eq!(h.order(), 68);
        let family = spence_sds(17).unwrap();
        let [p1, p2, x, y] = <[Vec<u32>; 4]>::try_from(family.sets.clone()).unwrap();
        let sets = [p1.as_slice(), &x, &y, &p2];
        let array = spence_array(&family.group, &sets).unwrap();
        assert_eq!(array.solve(), Some(SPENCE_PRINTED));
        assert!(spence_hadamard(9).is_err());
    }

    #[test]
    fn cds_skew_small() {
        let pair = cds(7, Some(CdsVariant::Squares)).unwrap();
        let h = cds_skew_hadamard(&pair).unwrap();
        assert_eq!(h.order(), 16);
        assert!((0..16).all(|i| h.get(i, i) == 1));
    }

    #[test]
    fn spence_skew_small() {
        assert_eq!(spence_skew(3).unwrap().order(), 52);
        for q in [3u64, 4, 5] {
            let (d1, d2) = planar_split(q).unwrap();
            assert_eq!(d1.len() as u64, q + 1);
            assert_eq!(d2.len() as u64, (q * q - q) / 2);
        }
    }
}
