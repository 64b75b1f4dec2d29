use std::fmt;

use super::family::{is_skew_set, SubsetFamily};
use super::group::AbelianGroup;
use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::galois::field;

/// Skew `2-{2m+1; m, m; m-1}` SDS `(A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdsPair {
    pub group: AbelianGroup,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl CdsPair {
    pub fn new(group: AbelianGroup, mut a: Vec<u32>, mut b: Vec<u32>) -> Result<Self> {
        a.sort_unstable();
        b.sort_unstable();
        let pair = CdsPair { group, a, b };
        pair.as_family()?;
        Ok(pair)
    }

    /// `m` where the group has order `2m + 1`.
    pub fn m(&self) -> u32 {
        (self.group.order() - 1) / 2
    }

    /// The pair as a verified SDS with `A` skew.
    pub fn as_family(&self) -> Result<SubsetFamily> {
        let v = self.group.order();
        if v.is_multiple_of(2) || self.a.len() as u32 != self.m() || self.b.len() as u32 != self.m() {
            return Err(Error::check("complementary difference sets", "sizes must be m in a group of order 2m+1"));
        }
        if !is_skew_set(&self.group, &self.a) {
            return Err(Error::check("complementary difference sets", "A is not skew"));
        }
        let m = self.m() as u64;
        SubsetFamily::new(
            self.group.clone(),
            vec![self.a.clone(), self.b.clone()],
            m.saturating_sub(1),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CdsVariant {
    /// Nonzero squares of GF(q), `q = 3 mod 4`.
    Squares,
    /// Fourth or eighth power classes of GF(p^t), `p = 5 mod 8`, `t != 0 mod 4`.
    PowerClasses,
    /// `A = {a : rho^{2a} - 1 square}`, `B = {b : rho^{2b} + 1 square}` in `Z_n`
    /// when `2n + 1 = 4m + 3` is a prime power.
    Cyclic,
}

impl fmt::Display for CdsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CdsVariant::Squares => "squares",
            CdsVariant::PowerClasses => "power-classes",
            CdsVariant::Cyclic => "cyclic",
        })
    }
}

impl CdsVariant {
    pub const ALL: [CdsVariant; 3] = [CdsVariant::Squares, CdsVariant::PowerClasses, CdsVariant::Cyclic];

    /// Whether this variant's arithmetic condition holds for group order `v`.
    pub fn applies(self, v: u64) -> bool {
        match self {
            CdsVariant::Squares => v % 4 == 3 && prime_power(v).is_some(),
            CdsVariant::PowerClasses => {
                matches!(prime_power(v), Some((p, t)) if p % 8 == 5 && t % 4 != 0)
            }
            CdsVariant::Cyclic => v % 2 == 1 && prime_power(2 * v + 1).is_some(),
        }
    }
}

/// Complementary difference sets in a group of order `v`, by the given
/// variant or the first applicable one.
pub fn cds(v: u64, variant: Option<CdsVariant>) -> Result<CdsPair> {
    let chosen = match variant {
        Some(var) if var.applies(v) => var,
        Some(var) => {
            return Err(Error::NotApplicable(format!(
                "complementary difference sets variant {var} needs a different order than {v}"
            )))
        }
        None => *CdsVariant::ALL
            .iter()
            .find(|var| var.applies(v))
            .ok_or_else(|| {
                Error::NotApplicable(format!("no complementary difference set construction for order {v}"))
            })?,
    };
    match chosen {
        CdsVariant::Squares => squares(v),
        CdsVariant::PowerClasses => power_classes(v),
        CdsVariant::Cyclic => cyclic(v),
    }
}

pub fn cds_exists(v: u64) -> bool {
    CdsVariant::ALL.iter().any(|var| var.applies(v))
}

fn squares(q: u64) -> Result<CdsPair> {
    let f = field(q)?;
    let group = AbelianGroup::elementary(f.characteristic(), f.degree());
    let sq = f.power_residues(2)?;
    CdsPair::new(group, sq.clone(), sq)
}

fn power_classes(q: u64) -> Result<CdsPair> {
    let f = field(q)?;
    let group = AbelianGroup::elementary(f.characteristic(), f.degree());
    let union = |k: u32, idx: &[u32]| -> Result<Vec<u32>> {
        let mut out = Vec::new();
        for &i in idx {
            out.extend(f.cyclotomic_class(k, i)?);
        }
        Ok(out)
    };
    let (a, b) = if f.degree() % 2 == 1 {
        (union(4, &[0, 1])?, union(4, &[0, 3])?)
    } else {
        (union(8, &[0, 1, 2, 3])?, union(8, &[0, 1, 6, 7])?)
    };
    CdsPair::new(group, a, b)
}

fn cyclic(n: u64) -> Result<CdsPair> {
    let f = field(2 * n + 1)?;
    let minus_one = f.neg(1);
    let a = (0..n).filter(|&a| f.chi(f.add(f.exp(2 * a), minus_one)) == 1);
    let b = (0..n).filter(|&b| f.chi(f.add(f.exp(2 * b), 1)) == 1);
    CdsPair::new(
        AbelianGroup::cyclic(n as u32),
        a.map(|x| x as u32).collect(),
        b.map(|x| x as u32).collect(),
    )
}
