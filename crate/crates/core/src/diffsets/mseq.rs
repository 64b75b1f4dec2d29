use crate::error::{Error, Result};
use crate::galois::{field, find_primitive_poly};

/// One period of a maximal-length linear recurring sequence over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSeq {
    pub q: u32,
    pub degree: u32,
    /// Field element codes, length `q^degree - 1`.
    pub values: Vec<u32>,
}

fn period(q: u32, n: u32) -> Result<u64> {
    (q as u64)
        .checked_pow(n)
        .filter(|&p| p <= 1 << 26)
        .map(|p| p - 1)
        .ok_or_else(|| Error::invalid(format!("period {q}^{n} - 1 is too large")))
}

/// `a_k = -c_0^{-1} sum_{i=1..N} c_i a_{k-i}` started from `(1, 0, ..., 0)`
/// with `c` a primitive polynomial of degree `N` over GF(q).
pub fn m_sequence(q: u32, n: u32) -> Result<MSeq> {
    if n == 0 {
        return Err(Error::invalid("m-sequence of degree 0"));
    }
    let f = field(q as u64)?;
    let len = period(q, n)? as usize;
    let c = find_primitive_poly(&f, n as usize);
    let n = n as usize;
    let scale = f.neg(f.inv(c.coeff(0)).expect("primitive polynomials have c_0 != 0"));
    let taps: Vec<(usize, u32)> = (1..=n)
        .map(|i| (i, f.mul(scale, c.coeff(i))))
        .filter(|&(_, t)| t != 0)
        .collect();
    let mut values = Vec::with_capacity(len);
    values.push(1);
    values.resize(n.min(len), 0);
    while values.len() < len {
        let k = values.len();
        let next = taps
            .iter()
            .fold(0, |acc, &(i, t)| f.add(acc, f.mul(t, values[k - i])));
        values.push(next);
    }
    Ok(MSeq {
        q,
        degree: n as u32,
        values,
    })
}

/// Subset of `Z_{mn}` whose differences avoid the subgroup of order `n`
/// (the multiples of `m`) and cover every other element exactly `d` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelDiffSet {
    pub m: u64,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub elements: Vec<u64>,
}

impl RelDiffSet {
    pub fn new(m: u64, n: u64, d: u64, mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        let r = RelDiffSet {
            m,
            n,
            k: elements.len() as u64,
            d,
            elements,
        };
        r.verify()?;
        Ok(r)
    }

    pub fn group_order(&self) -> u64 {
        self.m * self.n
    }

    pub fn params(&self) -> String {
        format!("R({}, {}, {}, {})", self.m, self.n, self.k, self.d)
    }

    /// Full `O(k^2)` difference count.
    pub fn verify(&self) -> Result<()> {
        let v = self.group_order();
        let fail = |msg: String| Err(Error::check(self.params(), msg));
        if v == 0 || self.elements.windows(2).any(|w| w[0] == w[1]) {
            return fail("elements repeat or group is trivial".into());
        }
        if self.elements.iter().any(|&x| x >= v) {
            return fail("element outside the group".into());
        }
        let mut counts = vec![0u64; v as usize];
        for &a in &self.elements {
            for &b in &self.elements {
                if a != b {
                    counts[((a + v - b) % v) as usize] += 1;
                }
            }
        }
        for (g, &c) in counts.iter().enumerate().skip(1) {
            let want = if (g as u64).is_multiple_of(self.m) { 0 } else { self.d };
            if c != want {
                return fail(format!("difference {g} occurs {c} times, expected {want}"));
            }
        }
        Ok(())
    }

    /// `D + g`.
    pub fn translate(&self, g: u64) -> RelDiffSet {
        let v = self.group_order();
        let mut elements: Vec<u64> = self.elements.iter().map(|&x| (x + g) % v).collect();
        elements.sort_unstable();
        RelDiffSet {
            elements,
            ..self.clone()
        }
    }

    pub fn is_fixed_by(&self, t: u64) -> bool {
        let v = self.group_order();
        let mut scaled: Vec<u64> = self.elements.iter().map(|&x| x * t % v).collect();
        scaled.sort_unstable();
        scaled == self.elements
    }
}

/// `{ i : a_i = 1 }` for an m-sequence of degree `N >= 2` over GF(q), an
/// `R((q^N-1)/(q-1), q-1, q^{N-1}, q^{N-2})` in `Z_{q^N - 1}`.
pub fn rds_from_m_sequence(q: u32, n: u32) -> Result<RelDiffSet> {
    if n < 2 {
        return Err(Error::invalid("relative difference sets need N >= 2"));
    }
    let s = m_sequence(q, n)?;
    let q = q as u64;
    let v = s.values.len() as u64;
    let elements = (0..v).filter(|&i| s.values[i as usize] == 1).collect();
    RelDiffSet::new(v / (q - 1), q - 1, q.pow(n - 2), elements)
}

/// Image of [`rds_from_m_sequence`] under `x -> x mod (q^N - 1)/d`, whose
/// kernel is the subgroup of order `d`.
pub fn rds_from_homomorphism(q: u32, n: u32, d: u32) -> Result<RelDiffSet> {
    if d == 0 || !(q - 1).is_multiple_of(d) {
        return Err(Error::invalid(format!("{d} does not divide {}", q - 1)));
    }
    let base = rds_from_m_sequence(q, n)?;
    let target = base.group_order() / d as u64;
    let mut image: Vec<u64> = base.elements.iter().map(|&x| x % target).collect();
    image.sort_unstable();
    image.dedup();
    if image.len() as u64 != base.k {
        return Err(Error::check(base.params(), "quotient map is not injective on the set"));
    }
    RelDiffSet::new(base.m, base.n / d as u64, base.d * d as u64, image)
}

/// A translate `D + g` fixed by multiplication by `t`, scanning `g` upward.
pub fn find_fixed_translate(d: &RelDiffSet, t: u64) -> Result<RelDiffSet> {
    (0..d.group_order())
        .map(|g| d.translate(g))
        .find(|c| c.is_fixed_by(t))
        .ok_or_else(|| Error::NotApplicable(format!("no translate of {} is fixed by {t}", d.params())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn window_property(s: &MSeq) -> bool {
        let len = s.values.len();
        let n = s.degree as usize;
        let windows: HashSet<Vec<u32>> = (0..len)
            .map(|i| (0..n).map(|j| s.values[(i + j) % len]).collect())
            .collect();
        windows.len() == len && !windows.contains(&vec![0; n])
    }

    #[test]
    fn m_sequences_visit_every_nonzero_window() {
        let s = m_sequence(2, 2).unwrap();
        assert_eq!(s.values.len(), 3);
        assert_eq!(s.values.iter().filter(|&&x| x == 1).count(), 2);
        let s = m_sequence(2, 3).unwrap();
        assert_eq!(s.values.iter().filter(|&&x| x == 1).count(), 4);
        for (q, n) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2), (9, 2), (3, 6)] {
            assert!(window_property(&m_sequence(q, n).unwrap()), "q={q} N={n}");
        }
    }

    #[test]
    fn relative_difference_sets() {
        let r = rds_from_m_sequence(2, 2).unwrap();
        assert_eq!((r.m, r.n, r.k, r.d, r.group_order()), (3, 1, 2, 1, 3));
        let r = rds_from_m_sequence(2, 3).unwrap();
        assert_eq!(r.params(), "R(7, 1, 4, 2)");
        let r = rds_from_m_sequence(3, 2).unwrap();
        assert_eq!((r.params(), r.group_order()), ("R(4, 2, 3, 1)".to_string(), 8));
        let h = rds_from_homomorphism(3, 2, 2).unwrap();
        assert_eq!((h.params(), h.group_order()), ("R(4, 1, 3, 2)".to_string(), 4));
        let h = rds_from_homomorphism(5, 2, 2).unwrap();
        assert_eq!((h.params(), h.group_order()), ("R(6, 2, 5, 2)".to_string(), 12));
        assert_eq!(rds_from_homomorphism(5, 2, 1).unwrap(), rds_from_m_sequence(5, 2).unwrap());
        assert!(rds_from_homomorphism(5, 2, 3).is_err());
    }

    #[test]
    fn fixed_translates() {
        let r = rds_from_m_sequence(3, 2).unwrap();
        let f = find_fixed_translate(&r, 3).unwrap();
        assert!(f.is_fixed_by(3));
        f.verify().unwrap();
        let one = find_fixed_translate(&r, 1).unwrap();
        assert_eq!(one, r);
        // {0, 1} in Z_4 relative to the trivial subgroup: no translate is fixed by 3.
        let d = RelDiffSet {
            m: 4,
            n: 1,
            k: 2,
            d: 1,
            elements: vec![0, 1],
        };
        assert!(find_fixed_translate(&d, 3).is_err());
    }
}
