use super::mseq::m_sequence;
use crate::arith::prime_power;
use crate::error::{Error, Result};

/// Planar `(q^4+q^2+1, q^2+1, 1)` difference set in `Z_{q^4+q^2+1}`: the
/// zeros among the first `v` terms of a degree-3 m-sequence over GF(q^2).
pub fn singer_difference_set(q: u64) -> Result<Vec<u64>> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    let q2 = u32::try_from(q * q).map_err(|_| Error::invalid("q is too large"))?;
    let s = m_sequence(q2, 3)?;
    let v = q * q * q * q + q * q + 1;
    let set: Vec<u64> = (0..v).filter(|&i| s.values[i as usize] == 0).collect();
    verify_planar(v, &set)?;
    Ok(set)
}

fn verify_planar(v: u64, set: &[u64]) -> Result<()> {
    let mut seen = vec![false; v as usize];
    for &a in set {
        for &b in set {
            if a != b && std::mem::replace(&mut seen[((a + v - b) % v) as usize], true) {
                return Err(Error::check("planar difference set", "a difference repeats"));
            }
        }
    }
    if seen.iter().skip(1).all(|&x| x) {
        Ok(())
    } else {
        Err(Error::check("planar difference set", "a difference is missing"))
    }
}
