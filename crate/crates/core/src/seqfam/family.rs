use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lengths for which Turyn sequences are known.
pub const KNOWN_TURYN_LENGTHS: [usize; 9] = [2, 3, 4, 5, 6, 7, 8, 13, 15];

/// Nonperiodic autocorrelation `sum_i a_i a_{i+j}`; zero once `j` reaches the length.
pub fn npaf(a: &[i8], j: usize) -> i64 {
    if j >= a.len() {
        return 0;
    }
    a.iter()
        .zip(&a[j..])
        .map(|(&x, &y)| x as i64 * y as i64)
        .sum()
}

/// Whether `sum_i w_i N_{A_i}(j)` vanishes for every `j >= 1`.
pub fn is_complementary(family: &[Vec<i8>], weights: &[i64]) -> bool {
    if family.len() != weights.len() {
        return false;
    }
    let longest = family.iter().map(Vec::len).max().unwrap_or(0);
    (1..longest).all(|j| {
        family
            .iter()
            .zip(weights)
            .map(|(a, &w)| w * npaf(a, j))
            .sum::<i64>()
            == 0
    })
}

/// `(a_1, b_1, a_2, b_2, ..., a_k)`; requires `|b| = |a| - 1`.
pub fn interleave(a: &[i8], b: &[i8]) -> Result<Vec<i8>> {
    if a.is_empty() || b.len() + 1 != a.len() {
        return Err(Error::Dimension(format!(
            "cannot interleave lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mut out = Vec::with_capacity(2 * a.len() - 1);
    for (x, y) in a.iter().zip(b) {
        out.push(*x);
        out.push(*y);
    }
    out.push(a[a.len() - 1]);
    Ok(out)
}

/// Disjoint support covering every position, plus zero autocorrelation sum.
pub fn is_t_sequences(family: &[Vec<i8>]) -> bool {
    let Some(first) = family.first() else {
        return false;
    };
    let t = first.len();
    if family.len() != 4 || family.iter().any(|s| s.len() != t) {
        return false;
    }
    let covered = (0..t).all(|i| family.iter().filter(|s| s[i] != 0).count() == 1);
    covered && is_complementary(family, &[1, 1, 1, 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqKind {
    Turyn,
    TurynType,
    Base,
    TSequence,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::Turyn => "turyn",
            SeqKind::TurynType => "turyn_type",
            SeqKind::Base => "base",
            SeqKind::TSequence => "t_sequence",
        })
    }
}

/// Four sequences of a given kind, in the order `X, U, Y, V` (Turyn),
/// `X, Y, Z, W` (Turyn type), `A, B, C, D` (base) or `T_1..T_4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqFamily {
    pub kind: SeqKind,
    pub members: Vec<Vec<i8>>,
}

impl SeqFamily {
    pub fn new(kind: SeqKind, members: Vec<Vec<i8>>) -> Result<Self> {
        let fam = SeqFamily { kind, members };
        fam.verify()?;
        Ok(fam)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// The characteristic length: `l`, `n`, `(n, p)` collapsed to `n + p`, or `t`.
    pub fn length(&self) -> usize {
        self.members.first().map_or(0, Vec::len)
    }

    fn sign_only(&self) -> bool {
        self.members.iter().flatten().all(|&v| v == 1 || v == -1)
    }

    /// Shape, alphabet and autocorrelation identity for this kind.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::check(format!("{} sequences", self.kind), msg));
        let len = self.lengths();
        if len.len() != 4 || len[0] == 0 {
            return fail("expected four non-empty sequences");
        }
        match self.kind {
            SeqKind::Turyn => {
                let l = len[0];
                if len != [l, l, l - 1, l - 1] || l < 2 {
                    return fail("lengths must be l, l, l-1, l-1");
                }
                if !self.sign_only() {
                    return fail("entries must be +1 or -1");
                }
                let (x, u) = (&self.members[0], &self.members[1]);
                if x[0] != 1 || x[l - 1] != -1 || u[l - 1] != 1 {
                    return fail("endpoint conditions x_1 = 1, x_l = -1, u_l = 1 violated");
                }
                if !is_complementary(&self.members, &[1, 1, 1, 1]) {
                    return fail("autocorrelations do not cancel");
                }
                t_sequences_from_turyn(self).map(|_| ())
            }
            SeqKind::TurynType => {
                let n = len[0];
                if len != [n, n, n, n - 1] || n < 2 {
                    return fail("lengths must be n, n, n, n-1");
                }
                if !self.sign_only() {
                    return fail("entries must be +1 or -1");
                }
                if !is_complementary(&self.members, &[1, 1, 2, 2]) {
                    return fail("weighted autocorrelations do not cancel");
                }
                Ok(())
            }
            SeqKind::Base => {
                if len[0] != len[1] || len[2] != len[3] || len[2] > len[0] {
                    return fail("lengths must be n+p, n+p, n, n");
                }
                if !self.sign_only() {
                    return fail("entries must be +1 or -1");
                }
                if !is_complementary(&self.members, &[1, 1, 1, 1]) {
                    return fail("autocorrelations do not cancel");
                }
                Ok(())
            }
            SeqKind::TSequence => {
                if is_t_sequences(&self.members) {
                    Ok(())
                } else {
                    fail("support is not a partition or autocorrelations do not cancel")
                }
            }
        }
    }
}

/// `A = Z;W`, `B = Z;-W`, `C = X`, `D = Y` from Turyn-type `X, Y, Z, W`.
pub fn base_from_turyn_type(tt: &SeqFamily) -> Result<SeqFamily> {
    if tt.kind != SeqKind::TurynType {
        return Err(Error::invalid("expected Turyn-type sequences"));
    }
    let [x, y, z, w] = [0, 1, 2, 3].map(|i| &tt.members[i]);
    let a: Vec<i8> = z.iter().chain(w).copied().collect();
    let b: Vec<i8> = z.iter().copied().chain(w.iter().map(|v| -v)).collect();
    SeqFamily::new(SeqKind::Base, vec![a, b, x.clone(), y.clone()])
}

/// T-sequences of length `2n + p` from base sequences of lengths `(n+p, n+p, n, n)`.
pub fn t_sequences_from_base(base: &SeqFamily) -> Result<SeqFamily> {
    if base.kind != SeqKind::Base && base.kind != SeqKind::Turyn {
        return Err(Error::invalid("expected base sequences"));
    }
    let [a, b, c, d] = [0, 1, 2, 3].map(|i| &base.members[i]);
    let (np, n) = (a.len(), c.len());
    let half = |x: &[i8], y: &[i8], sign: i8| -> Vec<i8> {
        x.iter().zip(y).map(|(&u, &v)| (u + sign * v) / 2).collect()
    };
    let pad_after = |mut s: Vec<i8>, k: usize| {
        s.resize(s.len() + k, 0);
        s
    };
    let pad_before = |s: Vec<i8>, k: usize| {
        let mut out = vec![0; k];
        out.extend(s);
        out
    };
    SeqFamily::new(
        SeqKind::TSequence,
        vec![
            pad_after(half(a, b, 1), n),
            pad_after(half(a, b, -1), n),
            pad_before(half(c, d, 1), np),
            pad_before(half(c, d, -1), np),
        ],
    )
}

/// T-sequences of length `4l - 1` from Turyn sequences `X, U, Y, V`.
///
/// The long pair is tried in the order `(X, U)` and then `(U, X)`; for odd
/// `l` only the second placement gives vanishing odd-shift terms.
pub fn t_sequences_from_turyn(turyn: &SeqFamily) -> Result<SeqFamily> {
    if turyn.kind != SeqKind::Turyn {
        return Err(Error::invalid("expected Turyn sequences"));
    }
    let [x, u, y, v] = [0, 1, 2, 3].map(|i| &turyn.members[i]);
    let l = x.len();
    let mut last = None;
    for (a, b) in [(x, u), (u, x)] {
        let mut t1 = vec![0i8; 4 * l - 1];
        t1[0] = 1;
        let mut t2 = vec![0i8];
        t2.extend(interleave(a, y)?);
        t2.resize(4 * l - 1, 0);
        let mut t3 = vec![0i8; 2 * l];
        t3.extend(interleave(b, &vec![0; l - 1])?);
        let mut t4 = vec![0i8; 2 * l];
        t4.extend(interleave(&vec![0; l], v)?);
        match SeqFamily::new(SeqKind::TSequence, vec![t1, t2, t3, t4]) {
            Ok(f) => return Ok(f),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("two placements tried"))
}
