use std::collections::BTreeSet;

use super::family::SubsetFamily;
use super::group::AbelianGroup;
use super::mseq::{find_fixed_translate, rds_from_m_sequence};
use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::galois::field;

/// Smallest `s > 0` with `r = (q - (2^{s+1} + 1)) / 2^{s+1}` an odd prime
/// power, as `(s, r)`.
pub fn spence_sds_parameters(q: u64) -> Option<(u32, u64)> {
    if q.is_multiple_of(2) || prime_power(q).is_none() {
        return None;
    }
    (1..u64::BITS - 1).find_map(|s| {
        let step = 1u64 << (s + 1);
        let top = q.checked_sub(step + 1)?;
        let r = top / step;
        (top % step == 0 && r % 2 == 1 && prime_power(r).is_some()).then_some((s, r))
    })
}

pub fn spence_sds_exists(q: u64) -> bool {
    spence_sds_parameters(q).is_some()
}

/// `4-{2v; v, v+1, v, v; 2v}` SDS in `Z_{2v}`, `v = (q-1)/2`.
///
/// The last two sets come from a relative difference set over GF(r) fixed by
/// `r`, projected to `Z_{2(r+1)}` and doubled `s` times; the first two are
/// lifts of cyclotomic subsets of `Z_v` defined over GF(q).
pub fn spence_sds(q: u64) -> Result<SubsetFamily> {
    let (s, r) = spence_sds_parameters(q).ok_or_else(|| {
        Error::NotApplicable(format!("no s > 0 makes q = {q} admissible for the Spence SDS"))
    })?;
    let v = (q - 1) / 2;
    let (psi3, psi4) = rds_pair(r, s)?;
    let (psi1, psi2) = cyclotomic_pair(q)?;
    let to_vec = |s: BTreeSet<u64>| s.into_iter().map(|x| x as u32).collect::<Vec<u32>>();
    SubsetFamily::new(
        AbelianGroup::cyclic(2 * v as u32),
        vec![to_vec(psi1), to_vec(psi2), to_vec(psi3), to_vec(psi4)],
        2 * v,
    )
}

fn rds_pair(r: u64, s: u32) -> Result<(BTreeSet<u64>, BTreeSet<u64>)> {
    let m = r + 1;
    let d = find_fixed_translate(&rds_from_m_sequence(r as u32, 2)?, r)?;
    let group = d.group_order();
    let d1 = (0..r - 1)
        .map(|k| d.translate(k * m))
        .find(|t| t.elements.contains(&0))
        .ok_or_else(|| Error::check("Spence translate", "no element congruent to 0 mod r + 1"))?;
    debug_assert!(d1.is_fixed_by(r) && group % (2 * m) == 0);
    let e: BTreeSet<u64> = d1.elements.iter().map(|&x| x % (2 * m)).collect();
    let missing: Vec<u64> = (0..m)
        .filter(|&x| !e.contains(&x) && !e.contains(&(x + m)))
        .collect();
    let [gap] = missing[..] else {
        return Err(Error::check(
            "Spence projection",
            format!("{} cosets of the order-2 subgroup are missed, expected 1", missing.len()),
        ));
    };
    let mut x: BTreeSet<u64> = e.iter().copied().chain([gap]).collect();
    let mut y: BTreeSet<u64> = e.iter().copied().chain([gap + m]).collect();
    let mut order = 2 * m;
    for _ in 0..s {
        let evens: Vec<u64> = x.iter().map(|&a| 2 * a).collect();
        let nx = evens.iter().copied().chain(y.iter().map(|&b| 2 * b + 1)).collect();
        let ny = evens
            .iter()
            .copied()
            .chain((0..order).filter(|c| !y.contains(c)).map(|c| 2 * c + 1))
            .collect();
        x = nx;
        y = ny;
        order *= 2;
    }
    Ok((x, y))
}

fn cyclotomic_pair(q: u64) -> Result<(BTreeSet<u64>, BTreeSet<u64>)> {
    let f = field(q)?;
    let v = (q - 1) / 2;
    let minus_one = f.neg(1);
    let chi_shift = |e: u64| f.chi(f.add(f.exp(e), minus_one));
    let theta1 = (0..v).filter(|&a| chi_shift(2 * a + 1) == 1);
    let theta2: Vec<u64> = (0..v).filter(|&a| chi_shift(2 * a) == -1).collect();
    let psi1 = theta1.flat_map(|a| [a, a + v]).collect();
    let psi2 = std::iter::once(0)
        .chain(theta2.iter().flat_map(|&a| [a, a + v]))
        .collect();
    Ok((psi1, psi2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_orders() {
        assert_eq!(spence_sds_parameters(5), None);
        assert_eq!(spence_sds_parameters(17), Some((1, 3)));
        assert_eq!(spence_sds_parameters(25), Some((1, 5)));
        assert_eq!(spence_sds_parameters(257), Some((2, 31)));
        let first: Vec<u64> = (3..60).filter(|&q| spence_sds_exists(q)).collect();
        assert_eq!(first, vec![17, 25, 41, 49]);
    }

    #[test]
    fn two_smallest_and_a_doubled_case() {
        for q in [17u64, 25, 257] {
            let fam = spence_sds(q).unwrap();
            let v = (q - 1) as usize / 2;
            assert_eq!(fam.sizes(), vec![v, v + 1, v, v]);
            assert_eq!(fam.lambda, 2 * v as u64);
        }
        assert!(spence_sds(19).is_err());
    }
}
