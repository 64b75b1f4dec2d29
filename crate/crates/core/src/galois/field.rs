use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{Poly, QuotientRing};
use crate::arith::{factorize, prime_power};
use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 22;
const POLY_SEED: u64 = 0x6861_6461_6d61_7264;

/// Arithmetic context for GF(p^m).
///
/// Elements are encoded as `u32` codes: the code of `c_0 + c_1 x + ...` is
/// `c_0 + c_1 p + c_2 p^2 + ...`, so `0` and `1` are the additive and
/// multiplicative identities and codes below `p` form the prime subfield.
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Poly,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {}", self.q, self.modulus.display())
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u64, Arc<FieldCtx>>>> = OnceLock::new();

/// The field of order `q`, built once per process and shared afterwards.
pub fn field(q: u64) -> Result<Arc<FieldCtx>> {
    let cache = FIELDS.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("field cache poisoned").get(&q) {
        return Ok(f.clone());
    }
    let ctx = Arc::new(FieldCtx::build(q)?);
    cache
        .lock()
        .expect("field cache poisoned")
        .entry(q)
        .or_insert(ctx.clone());
    Ok(ctx)
}

impl FieldCtx {
    fn build(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::invalid(format!("field order {q} exceeds {MAX_ORDER}")));
        }
        let p32 = p as u32;
        if m == 1 {
            let g = (1..p32.max(2))
                .find(|&g| crate::arith::factorize(p - 1).iter().all(|&(r, _)| {
                    crate::arith::pow_mod(g as u64, (p - 1) / r, p) != 1
                }))
                .unwrap_or(1);
            let modulus = Poly::new(vec![(p32 - g) % p32, 1]);
            return Ok(Self::with_generator(p32, 1, modulus, |acc| {
                (acc as u64 * g as u64 % p) as u32
            }));
        }
        let base = field(p)?;
        let modulus = find_primitive_poly(&base, m as usize);
        let ring = QuotientRing::new(&base, &modulus);
        let x = ring.x();
        let pw: Vec<u32> = (0..m).map(|i| p32.pow(i)).collect();
        let ctx = Self::with_generator(p32, m, modulus.clone(), |acc| {
            let digits: Vec<u32> = (0..m as usize).map(|i| acc / pw[i] % p32).collect();
            ring.mul(&digits, &x)
                .iter()
                .zip(&pw)
                .map(|(c, w)| c * w)
                .sum()
        });
        Ok(ctx)
    }

    fn with_generator(p: u32, m: u32, modulus: Poly, mut times_g: impl FnMut(u32) -> u32) -> Self {
        let q = p.pow(m);
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut acc = 1u32;
        for i in 0..q - 1 {
            exp.push(acc);
            log[acc as usize] = i;
            acc = times_g(acc);
        }
        debug_assert_eq!(acc, 1);
        FieldCtx {
            p,
            m,
            q,
            modulus,
            exp,
            log,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Defining polynomial over the prime field; a root is the primitive element.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn elem(&self, code: u32) -> FieldElem<'_> {
        assert!(code < self.q, "code {code} outside GF({})", self.q);
        FieldElem { ctx: self, code }
    }

    pub fn zero(&self) -> FieldElem<'_> {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElem<'_> {
        self.elem(1)
    }

    /// Element with the given coefficient vector (lowest degree first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElem<'_> {
        let mut code = 0u32;
        for &c in coeffs.iter().take(self.m as usize).rev() {
            code = code * self.p + c % self.p;
        }
        self.elem(code)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem<'_>> {
        (0..self.q).map(move |c| self.elem(c))
    }

    pub fn coeffs(&self, code: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut c = code;
        for _ in 0..self.m {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut w, mut out) = (a, b, 1u32, 0u32);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
            w *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let (mut a, mut w, mut out) = (a, 1u32, 0u32);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
            w *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q as u64 - 1;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `g^i` for the primitive element `g`.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    pub fn primitive_element(&self) -> FieldElem<'_> {
        self.elem(self.exp(1))
    }

    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.q as u64 - 1;
        Some(n / crate::arith::gcd(l, n))
    }

    fn require_odd(&self) -> Result<()> {
        if self.p == 2 {
            Err(Error::invalid(format!("GF({}) has even characteristic", self.q)))
        } else {
            Ok(())
        }
    }

    /// 0 at zero, +1 on nonzero squares, -1 elsewhere.
    pub fn quadratic_character(&self, a: u32) -> Result<i8> {
        self.require_odd()?;
        Ok(self.chi(a))
    }

    /// [`quadratic_character`](Self::quadratic_character) for callers that
    /// already know the characteristic is odd.
    #[inline]
    pub(crate) fn chi(&self, a: u32) -> i8 {
        match self.log(a) {
            None => 0,
            Some(l) if l % 2 == 0 => 1,
            Some(_) => -1,
        }
    }

    /// `{ x^k : x != 0 }` in increasing code order.
    pub fn power_residues(&self, k: u32) -> Result<Vec<u32>> {
        self.cyclotomic_class(k, 0)
    }

    /// `g^i` times the nonzero `k`-th powers, in increasing code order.
    pub fn cyclotomic_class(&self, k: u32, i: u32) -> Result<Vec<u32>> {
        if k == 0 || !(self.q - 1).is_multiple_of(k) {
            return Err(Error::invalid(format!("{k} does not divide {}", self.q - 1)));
        }
        let mut out: Vec<u32> = (0..(self.q - 1) / k)
            .map(|j| self.exp(j as u64 * k as u64 + i as u64))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `a_0 = 0` and `a_{q-i} = -a_i`; `a_1..a_{(q-1)/2}` are the smallest
    /// codes of each `{x, -x}` pair.
    pub fn ordered_elements(&self) -> Result<Vec<u32>> {
        self.require_odd()?;
        let q = self.q as usize;
        let mut out = vec![0u32; q];
        let mut taken = vec![false; q];
        taken[0] = true;
        let mut i = 1;
        for c in 1..self.q {
            if taken[c as usize] {
                continue;
            }
            let n = self.neg(c);
            taken[c as usize] = true;
            taken[n as usize] = true;
            out[i] = c;
            out[q - i] = n;
            i += 1;
        }
        Ok(out)
    }
}

/// A field element bound to its context.
#[derive(Clone, Copy)]
pub struct FieldElem<'a> {
    ctx: &'a FieldCtx,
    code: u32,
}

impl<'a> FieldElem<'a> {
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn ctx(self) -> &'a FieldCtx {
        self.ctx
    }

    pub fn coeffs(self) -> Vec<u32> {
        self.ctx.coeffs(self.code)
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }

    pub fn inv(self) -> Option<Self> {
        self.ctx.inv(self.code).map(|c| self.ctx.elem(c))
    }

    pub fn pow(self, e: u64) -> Self {
        self.ctx.elem(self.ctx.pow(self.code, e))
    }

    pub fn multiplicative_order(self) -> Option<u64> {
        self.ctx.multiplicative_order(self.code)
    }

    pub fn quadratic_character(self) -> Result<i8> {
        self.ctx.quadratic_character(self.code)
    }
}

impl PartialEq for FieldElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ctx, other.ctx) && self.code == other.code
    }
}

impl Eq for FieldElem<'_> {}

impl fmt::Debug for FieldElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.m == 1 {
            write!(f, "{}", self.code)
        } else {
            write!(f, "{:?}", self.coeffs())
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr for FieldElem<'a> {
            type Output = FieldElem<'a>;
            fn $method(self, rhs: Self) -> Self::Output {
                assert!(std::ptr::eq(self.ctx, rhs.ctx), "elements of different fields");
                let f: fn(&FieldCtx, u32, u32) -> u32 = $body;
                FieldElem {
                    ctx: self.ctx,
                    code: f(self.ctx, self.code, rhs.code),
                }
            }
        }
    };
}

binop!(Add, add, |c, a, b| c.add(a, b));
binop!(Sub, sub, |c, a, b| c.sub(a, b));
binop!(Mul, mul, |c, a, b| c.mul(a, b));
binop!(Div, div, |c, a, b| c.mul(a, c.inv(b).expect("division by zero")));

impl<'a> Neg for FieldElem<'a> {
    type Output = FieldElem<'a>;
    fn neg(self) -> Self::Output {
        FieldElem {
            ctx: self.ctx,
            code: self.ctx.neg(self.code),
        }
    }
}

/// Does `x` have order `q^n - 1` modulo the monic polynomial `f` of degree `n`?
///
/// A unit of that order forces `F[x]/(f)` to be a field, so a positive answer
/// also certifies irreducibility.
pub fn is_primitive_poly(ctx: &FieldCtx, f: &Poly) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 || !f.is_monic() || f.coeff(0) == 0 {
        return false;
    }
    let Some(big) = (ctx.q as u64).checked_pow(n as u32) else {
        return false;
    };
    let order = big - 1;
    let ring = QuotientRing::new(ctx, f);
    let x = ring.x();
    if !QuotientRing::is_one(&ring.pow(&x, order)) {
        return false;
    }
    factorize(order)
        .iter()
        .all(|&(r, _)| !QuotientRing::is_one(&ring.pow(&x, order / r)))
}

/// A monic primitive polynomial of the given degree over `ctx`.
///
/// Candidates are drawn from a fixed-seed generator, so the result is the same
/// on every run.
pub fn find_primitive_poly(ctx: &FieldCtx, degree: usize) -> Poly {
    assert!(degree >= 1, "primitive polynomial of degree 0");
    let mut rng = ChaCha8Rng::seed_from_u64(POLY_SEED ^ ((ctx.q as u64) << 16) ^ degree as u64);
    loop {
        let mut c: Vec<u32> = (0..degree).map(|_| rng.gen_range(0..ctx.q)).collect();
        if c[0] == 0 {
            continue;
        }
        c.push(1);
        let f = Poly::new(c);
        if is_primitive_poly(ctx, &f) {
            return f;
        }
    }
}
