use serde::{Deserialize, Serialize};

use super::family::SubsetFamily;
use super::group::AbelianGroup;
use crate::error::{Error, Result};

/// One generator of the coset list: either a multiplier `c` (giving `cH`) or
/// an explicit subset of `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CosetSpec {
    Multiplier(u32),
    Explicit(Vec<u32>),
}

/// Data for an SDS assembled from orbits of a multiplicative subgroup.
///
/// Coset `2i` is `c_i H` and coset `2i + 1` is its negative. Set `S_k` is the
/// union of the cosets indexed by `j[k]`, plus 0 when `add_zero[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdsRecord {
    pub n: u32,
    #[serde(rename = "H")]
    pub h: Vec<u32>,
    pub cosets: Vec<CosetSpec>,
    #[serde(rename = "J")]
    pub j: [Vec<usize>; 4],
    pub add_zero: [bool; 4],
    pub skew: bool,
    #[serde(default)]
    pub source: String,
}

impl SdsRecord {
    /// The `2 * cosets.len()` orbits `alpha_0, alpha_1, ...`.
    pub fn orbits(&self) -> Result<Vec<Vec<u32>>> {
        let n = self.n;
        if n == 0 {
            return Err(Error::invalid("group order 0"));
        }
        if self.h.iter().any(|&x| x >= n) {
            return Err(Error::invalid("H contains a residue outside Z_n"));
        }
        let group = AbelianGroup::cyclic(n);
        let mut out = Vec::with_capacity(2 * self.cosets.len());
        for c in &self.cosets {
            let mut alpha: Vec<u32> = match c {
                CosetSpec::Multiplier(c) => self
                    .h
                    .iter()
                    .map(|&h| ((*c as u64 * h as u64) % n as u64) as u32)
                    .collect(),
                CosetSpec::Explicit(set) => {
                    if set.iter().any(|&x| x >= n) {
                        return Err(Error::invalid("explicit coset outside Z_n"));
                    }
                    set.clone()
                }
            };
            alpha.sort_unstable();
            alpha.dedup();
            let minus = group.negate_set(&alpha);
            out.push(alpha);
            out.push(minus);
        }
        Ok(out)
    }

    pub fn build(&self) -> Result<SubsetFamily> {
        construction_sds(self.n, &self.h, &self.cosets, &self.j, self.add_zero, self.skew)
    }
}

/// `S_k = U_{j in J_k} alpha_j` (plus 0 where flagged), verified as a
/// `4-{n; k_1..k_4; sum k_i - n}` SDS, skew in `S_1` when requested.
pub fn construction_sds(
    n: u32,
    h: &[u32],
    cosets: &[CosetSpec],
    j: &[Vec<usize>; 4],
    add_zero: [bool; 4],
    skew: bool,
) -> Result<SubsetFamily> {
    let rec = SdsRecord {
        n,
        h: h.to_vec(),
        cosets: cosets.to_vec(),
        j: j.clone(),
        add_zero,
        skew,
        source: String::new(),
    };
    let orbits = rec.orbits()?;
    let mut sets = Vec::with_capacity(4);
    for (idx, add) in j.iter().zip(add_zero) {
        let mut s: Vec<u32> = add.then_some(0).into_iter().collect();
        for &i in idx {
            let orbit = orbits
                .get(i)
                .ok_or_else(|| Error::invalid(format!("coset index {i} out of range")))?;
            s.extend(orbit);
        }
        let before = s.len();
        s.sort_unstable();
        s.dedup();
        if s.len() != before {
            return Err(Error::check("orbit SDS", "cosets within one set overlap"));
        }
        sets.push(s);
    }
    let total: u64 = sets.iter().map(|s| s.len() as u64).sum();
    let lambda = total.checked_sub(n as u64).ok_or_else(|| {
        Error::check("orbit SDS", format!("set sizes sum to {total}, less than n = {n}"))
    })?;
    let fam = SubsetFamily::unchecked(AbelianGroup::cyclic(n), sets, lambda);
    match fam.defect(skew) {
        None => Ok(fam),
        Some(d) => Err(Error::check(format!("orbit SDS for n = {n}"), d)),
    }
}
