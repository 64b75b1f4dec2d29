use super::family::SubsetFamily;
use super::group::AbelianGroup;
use crate::error::{Error, Result};

/// Exhaustive search for a `4-{n; k_1..k_4; lambda}` SDS in `Z_n` (any
/// number of sets), skew in `S_1` when requested.
///
/// `Ok(None)` means no such family exists; running past `budget` search
/// nodes gives [`Error::BudgetExhausted`]. Non-skew sets are translated to
/// contain 0, so results are canonical and repeat exactly between runs.
pub fn search_sds_bruteforce(
    n: u32,
    ks: &[usize],
    lambda: u64,
    skew: bool,
    budget: u64,
) -> Result<Option<SubsetFamily>> {
    if n == 0 || ks.is_empty() || ks.iter().any(|&k| k > n as usize) {
        return Err(Error::invalid("set sizes must fit in a non-trivial group"));
    }
    let pairs: u64 = ks.iter().map(|&k| (k * k.saturating_sub(1)) as u64).sum();
    if pairs != lambda * (n as u64 - 1) {
        return Ok(None);
    }
    if skew && (n.is_multiple_of(2) || ks[0] != (n as usize - 1) / 2) {
        return Ok(None);
    }
    let mut s = Search {
        n,
        ks,
        lambda,
        skew,
        budget,
        nodes: 0,
        counts: vec![0; n as usize],
        sets: vec![Vec::new(); ks.len()],
    };
    if s.fill(0)? {
        let fam = SubsetFamily::new(AbelianGroup::cyclic(n), s.sets, lambda)?;
        Ok(Some(fam))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    n: u32,
    ks: &'a [usize],
    lambda: u64,
    skew: bool,
    budget: u64,
    nodes: u64,
    counts: Vec<u64>,
    sets: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn push(&mut self, i: usize, x: u32) -> bool {
        let n = self.n;
        let mut ok = true;
        for &y in &self.sets[i] {
            let d = (x + n - y) % n;
            for g in [d, n - d] {
                self.counts[g as usize] += 1;
                ok &= self.counts[g as usize] <= self.lambda;
            }
        }
        self.sets[i].push(x);
        ok
    }

    fn pop(&mut self, i: usize) {
        let n = self.n;
        let x = self.sets[i].pop().expect("pop after push");
        for &y in &self.sets[i] {
            let d = (x + n - y) % n;
            self.counts[d as usize] -= 1;
            self.counts[(n - d) as usize] -= 1;
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    /// Candidates for the next element of set `i`, in search order.
    fn candidates(&self, i: usize) -> Vec<u32> {
        let n = self.n;
        let cur = &self.sets[i];
        if self.skew && i == 0 {
            let x = cur.len() as u32 + 1;
            return vec![x, n - x];
        }
        match cur.last() {
            None => vec![0],
            Some(&last) => (last + 1..n).collect(),
        }
    }

    fn fill(&mut self, i: usize) -> Result<bool> {
        if i == self.ks.len() {
            return Ok(self.counts.iter().skip(1).all(|&c| c == self.lambda));
        }
        if self.sets[i].len() == self.ks[i] {
            return self.fill(i + 1);
        }
        for x in self.candidates(i) {
            self.tick()?;
            if self.push(i, x) && self.fill(i)? {
                return Ok(true);
            }
            self.pop(i);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_of_seven() {
        let fam = search_sds_bruteforce(7, &[3, 3], 2, true, 1 << 20).unwrap().unwrap();
        assert_eq!(fam.params(), "2-{7; 3, 3; 2}");
        assert!(fam.is_skew());
        let again = search_sds_bruteforce(7, &[3, 3], 2, true, 1 << 20).unwrap().unwrap();
        assert_eq!(fam, again);
    }

    #[test]
    fn counting_and_budget() {
        assert_eq!(search_sds_bruteforce(7, &[3, 3], 3, false, 10).unwrap(), None);
        assert!(matches!(
            search_sds_bruteforce(13, &[4, 4, 4, 4], 4, false, 5),
            Err(Error::BudgetExhausted(5))
        ));
        assert!(search_sds_bruteforce(5, &[2, 2], 1, false, 1000).unwrap().is_some());
    }
}
