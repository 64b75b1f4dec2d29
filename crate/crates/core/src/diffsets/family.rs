use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::AbelianGroup;
use crate::error::{Error, Result};

/// Number of ordered pairs `(r, s)`, `r != s`, within one set, with `r - s = g`,
/// summed over all sets; index `g` is the group code.
pub fn difference_counts(group: &AbelianGroup, sets: &[Vec<u32>]) -> Vec<u64> {
    let mut counts = vec![0u64; group.order() as usize];
    for s in sets {
        for &a in s {
            for &b in s {
                if a != b {
                    counts[group.sub(a, b) as usize] += 1;
                }
            }
        }
    }
    counts
}

/// Whether `s` and `-s` partition the non-zero elements.
pub fn is_skew_set(group: &AbelianGroup, s: &[u32]) -> bool {
    let v = group.order() as usize;
    let mut seen = vec![false; v];
    for &x in s {
        if x == 0 || !group.contains(x) || seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
    }
    for &x in s {
        let n = group.neg(x) as usize;
        if seen[n] {
            return false;
        }
        seen[n] = true;
    }
    seen.iter().skip(1).all(|&b| b)
}

/// Why a family is not the claimed SDS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SdsDefect {
    Element { set: usize, element: u32 },
    Repeated { set: usize, element: u32 },
    Count { element: u32, count: u64, lambda: u64 },
    NotSkew,
}

impl fmt::Display for SdsDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SdsDefect::Element { set, element } => {
                write!(f, "set {set} contains {element}, which is outside the group")
            }
            SdsDefect::Repeated { set, element } => write!(f, "set {set} repeats {element}"),
            SdsDefect::Count {
                element,
                count,
                lambda,
            } => write!(
                f,
                "element {element} arises {count} times as a difference, expected {lambda}"
            ),
            SdsDefect::NotSkew => f.write_str("first set is not skew"),
        }
    }
}

/// Subsets of an abelian group with declared difference multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetFamily {
    pub group: AbelianGroup,
    pub sets: Vec<Vec<u32>>,
    pub lambda: u64,
}

impl SubsetFamily {
    /// Builds and verifies; sets are stored sorted.
    pub fn new(group: AbelianGroup, sets: Vec<Vec<u32>>, lambda: u64) -> Result<Self> {
        let fam = SubsetFamily::unchecked(group, sets, lambda);
        match fam.defect(false) {
            None => Ok(fam),
            Some(d) => Err(Error::check("supplementary difference sets", d)),
        }
    }

    pub(crate) fn unchecked(group: AbelianGroup, mut sets: Vec<Vec<u32>>, lambda: u64) -> Self {
        for s in &mut sets {
            s.sort_unstable();
        }
        SubsetFamily {
            group,
            sets,
            lambda,
        }
    }

    pub fn order(&self) -> u32 {
        self.group.order()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    /// `n-{v; k_1, ..., k_n; lambda}`.
    pub fn params(&self) -> String {
        let ks: Vec<String> = self.sizes().iter().map(|k| k.to_string()).collect();
        format!(
            "{}-{{{}; {}; {}}}",
            self.sets.len(),
            self.order(),
            ks.join(", "),
            self.lambda
        )
    }

    pub fn defect(&self, skew: bool) -> Option<SdsDefect> {
        let v = self.order() as usize;
        for (i, s) in self.sets.iter().enumerate() {
            let mut seen = vec![false; v];
            for &x in s {
                if x as usize >= v {
                    return Some(SdsDefect::Element { set: i, element: x });
                }
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Some(SdsDefect::Repeated { set: i, element: x });
                }
            }
        }
        let counts = difference_counts(&self.group, &self.sets);
        if let Some(g) = (1..v).find(|&g| counts[g] != self.lambda) {
            return Some(SdsDefect::Count {
                element: g as u32,
                count: counts[g],
                lambda: self.lambda,
            });
        }
        if skew && !self.sets.first().is_some_and(|s| is_skew_set(&self.group, s)) {
            return Some(SdsDefect::NotSkew);
        }
        None
    }

    pub fn is_skew(&self) -> bool {
        self.sets.first().is_some_and(|s| is_skew_set(&self.group, s))
    }
}

/// Checks the difference counts against the declared lambda and, with `skew`,
/// that the first set is skew. Verbose mode prints the first failure.
pub fn is_sds(family: &SubsetFamily, skew: bool, verbose: bool) -> bool {
    match family.defect(skew) {
        None => true,
        Some(d) => {
            if verbose {
                eprintln!("{d}");
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sds_examples() {
        let z3 = AbelianGroup::cyclic(3);
        assert!(is_sds(&SubsetFamily::unchecked(z3, vec![vec![1]], 0), false, false));
        let z7 = AbelianGroup::cyclic(7);
        let qr = vec![1, 2, 4];
        let fam = SubsetFamily::new(z7.clone(), vec![qr.clone(), qr.clone()], 2).unwrap();
        assert!(is_sds(&fam, true, false));
        assert_eq!(fam.params(), "2-{7; 3, 3; 2}");
        let wrong = SubsetFamily::unchecked(z7, vec![qr.clone(), qr], 3);
        assert!(!is_sds(&wrong, false, true));
        let z5 = AbelianGroup::cyclic(5);
        // -{1, 2} = {4, 3}, so {1, 2} meets each pair {x, -x} exactly once.
        assert!(is_skew_set(&z5, &[1, 2]));
        assert!(!is_skew_set(&z5, &[1, 4]));
        assert!(!is_skew_set(&z5, &[1]));
    }
}
