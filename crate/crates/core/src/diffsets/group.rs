use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite abelian group `Z_{m_0} x Z_{m_1} x ...` with mixed-radix codes.
///
/// The code of `(x_0, x_1, ...)` is `x_0 + m_0 (x_1 + m_1 (...))`. A single
/// modulus gives the cyclic group `Z_v` with codes equal to residues; `[p; m]`
/// matches the element codes of [`FieldCtx`](crate::galois::FieldCtx) and so
/// gives the additive group of GF(p^m).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    moduli: Vec<u32>,
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z{m}")).collect();
        f.write_str(&parts.join("x"))
    }
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::invalid("group moduli must be positive"));
        }
        if moduli.iter().try_fold(1u32, |acc, &m| acc.checked_mul(m)).is_none() {
            return Err(Error::invalid("group order overflows"));
        }
        Ok(AbelianGroup { moduli })
    }

    pub fn cyclic(v: u32) -> Self {
        assert!(v > 0, "cyclic group of order 0");
        AbelianGroup { moduli: vec![v] }
    }

    /// Additive group of GF(p^m).
    pub fn elementary(p: u32, m: u32) -> Self {
        AbelianGroup {
            moduli: vec![p; m as usize],
        }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> u32 {
        self.moduli.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.moduli.len() == 1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let [v] = self.moduli[..] {
            let s = a + b;
            return if s >= v { s - v } else { s };
        }
        self.combine(a, b, |x, y, m| (x + y) % m)
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if let [v] = self.moduli[..] {
            return if a == 0 { 0 } else { v - a };
        }
        self.combine(a, 0, |x, _, m| (m - x) % m)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if let [v] = self.moduli[..] {
            return if a >= b { a - b } else { a + v - b };
        }
        self.combine(a, b, |x, y, m| (x + m - y) % m)
    }

    fn combine(&self, mut a: u32, mut b: u32, f: impl Fn(u32, u32, u32) -> u32) -> u32 {
        let (mut out, mut w) = (0u32, 1u32);
        for &m in &self.moduli {
            out += f(a % m, b % m, m) * w;
            a /= m;
            b /= m;
            w *= m;
        }
        out
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order()
    }

    pub fn negate_set(&self, s: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = s.iter().map(|&x| self.neg(x)).collect();
        out.sort_unstable();
        out
    }
}
