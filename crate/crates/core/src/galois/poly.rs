use super::field::FieldCtx;

/// Polynomial over a field, coefficients as element codes, lowest degree first.
///
/// Trailing zero coefficients are trimmed so that `degree` is exact; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Renders with `x` as the variable, e.g. `x^3 + 2*x + 1`.
    pub fn display(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}*{var}"),
            });
        }
        terms.join(" + ")
    }
}

/// Multiplication in `F[x]/(f)` for a fixed monic modulus `f`.
pub(crate) struct QuotientRing<'a> {
    pub(crate) ctx: &'a FieldCtx,
    modulus: &'a [u32],
}

impl<'a> QuotientRing<'a> {
    pub(crate) fn new(ctx: &'a FieldCtx, modulus: &'a Poly) -> Self {
        debug_assert!(modulus.is_monic());
        QuotientRing {
            ctx,
            modulus: modulus.coeffs(),
        }
    }

    fn n(&self) -> usize {
        self.modulus.len() - 1
    }

    pub(crate) fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.ctx;
        let n = self.n();
        let mut prod = vec![0u32; 2 * n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus[..n].iter().enumerate() {
                prod[k - n + i] = f.sub(prod[k - n + i], f.mul(c, m));
            }
        }
        prod.truncate(n);
        prod
    }

    pub(crate) fn pow(&self, base: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = vec![0u32; self.n()];
        acc[0] = 1;
        let mut b = base.to_vec();
        b.resize(self.n(), 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// The residue class of `x`.
    pub(crate) fn x(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.n()];
        if self.n() == 1 {
            // x reduces to minus the constant term.
            v[0] = self.ctx.neg(self.modulus[0]);
        } else {
            v[1] = 1;
        }
        v
    }

    pub(crate) fn is_one(v: &[u32]) -> bool {
        v.first() == Some(&1) && v[1..].iter().all(|&c| c == 0)
    }
}
