use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::arrays::gs_array;
use crate::error::{Error, Result};
use crate::exactmat::{is_hadamard, is_skew_hadamard, Matrix, SignMatrix};
use crate::galois::field;

/// Orthogonal design `OD(n; u_1, ..., u_k)`.
///
/// Entry `v` stands for `sign(v) * x_{|v|}`, with 0 for a zero entry.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OdRepr", into = "OdRepr")]
pub struct OrthDesign {
    order: usize,
    types: Vec<usize>,
    entries: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct OdRepr {
    order: usize,
    types: Vec<usize>,
    rows: Vec<Vec<i8>>,
}

impl TryFrom<OdRepr> for OrthDesign {
    type Error = Error;
    fn try_from(r: OdRepr) -> Result<Self> {
        if r.rows.len() != r.order || r.rows.iter().any(|row| row.len() != r.order) {
            return Err(Error::invalid(format!("design rows do not form a {0}x{0} grid", r.order)));
        }
        OrthDesign::new(r.order, r.types, r.rows.concat())
    }
}

impl From<OrthDesign> for OdRepr {
    fn from(d: OrthDesign) -> Self {
        let rows = d.entries.chunks(d.order.max(1)).map(<[i8]>::to_vec).collect();
        OdRepr { order: d.order, types: d.types, rows }
    }
}

impl fmt::Debug for OrthDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl OrthDesign {
    /// Verifies `A A^T = (sum u_i x_i^2) I` by coefficient matching.
    pub fn new(order: usize, types: Vec<usize>, entries: Vec<i8>) -> Result<Self> {
        let d = OrthDesign { order, types, entries };
        d.verify()?;
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn name(&self) -> String {
        let ts: Vec<String> = self.types.iter().map(ToString::to_string).collect();
        format!("OD({}; {})", self.order, ts.join(", "))
    }

    fn fail(&self, msg: impl fmt::Display) -> Error {
        Error::check(self.name(), msg)
    }

    pub fn verify(&self) -> Result<()> {
        let (n, k) = (self.order, self.types.len());
        if n == 0 || k == 0 || k > i8::MAX as usize || self.entries.len() != n * n {
            return Err(self.fail("shape or variable count out of range"));
        }
        if self.entries.iter().any(|v| v.unsigned_abs() as usize > k) {
            return Err(self.fail("entry names an undeclared variable"));
        }
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            for (v, &u) in self.types.iter().enumerate() {
                let count = row.iter().filter(|e| e.unsigned_abs() as usize == v + 1).count();
                if count != u {
                    return Err(self.fail(format!("row {i} holds x{} {count} times, type says {u}", v + 1)));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut coeff: HashMap<(u8, u8), i64> = HashMap::new();
                for c in 0..n {
                    let (a, b) = (self.get(i, c), self.get(j, c));
                    if a != 0 && b != 0 {
                        let key = (a.unsigned_abs().min(b.unsigned_abs()), a.unsigned_abs().max(b.unsigned_abs()));
                        *coeff.entry(key).or_default() += (a.signum() * b.signum()) as i64;
                    }
                }
                if let Some(((v, w), _)) = coeff.iter().find(|(_, &c)| c != 0) {
                    return Err(self.fail(format!("rows {i},{j} leave a term x{v}*x{w}")));
                }
            }
        }
        Ok(())
    }

    /// Whether the design is `x_1 I` plus a skew-symmetric part.
    pub fn is_skew_normal(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| {
            self.get(i, i) == 1 && (0..n).all(|j| i == j || self.get(i, j) == -self.get(j, i))
        })
    }

    /// Replaces `x_v` by `blocks[v - 1]`; all blocks share one square shape.
    pub fn substitute(&self, blocks: &[&Matrix]) -> Result<Matrix> {
        if blocks.len() != self.types.len() {
            return Err(Error::invalid("one block per design variable is required"));
        }
        let b = blocks[0].order();
        if blocks.iter().any(|m| !m.is_square() || m.order() != b) {
            return Err(Error::Dimension("substituted blocks differ in order".into()));
        }
        let n = self.order;
        Matrix::from_fn(n * b, n * b, |i, j| {
            let e = self.get(i / b, j / b);
            if e == 0 {
                0
            } else {
                e.signum() * blocks[e.unsigned_abs() as usize - 1].get(i % b, j % b)
            }
        })
    }
}

/// Exhaustive search for an `OD(n; types)` of the form `x_1 I` plus a skew
/// part, filling the strict upper triangle row by row. Meant for tiny
/// orders; larger designs come from [`od_from_circulants`].
pub fn search_skew_od(order: usize, types: &[usize], budget: u64) -> Result<Option<OrthDesign>> {
    let k = types.len();
    if order == 0 || k == 0 || types[0] != 1 || types.iter().sum::<usize>() > order {
        return Err(Error::invalid("types must start with 1 and fit the order"));
    }
    let n = order;
    let mut grid = vec![0i8; n * n];
    for i in 0..n {
        grid[i * n + i] = 1;
    }
    let mut symbols: Vec<i8> = vec![0];
    for v in 2..=k as i8 {
        symbols.extend([v, -v]);
    }
    let mut nodes = 0u64;
    fn row_ok(grid: &[i8], n: usize, i: usize, types: &[usize]) -> bool {
        let row = &grid[i * n..(i + 1) * n];
        let zeros = n - types.iter().sum::<usize>();
        row.iter().filter(|&&e| e == 0).count() == zeros
            && types
                .iter()
                .enumerate()
                .all(|(v, &u)| row.iter().filter(|e| e.unsigned_abs() as usize == v + 1).count() == u)
    }
    fn orthogonal(grid: &[i8], n: usize, i: usize, j: usize) -> bool {
        let mut coeff: HashMap<(u8, u8), i64> = HashMap::new();
        for c in 0..n {
            let (a, b) = (grid[i * n + c], grid[j * n + c]);
            if a != 0 && b != 0 {
                let key = (a.unsigned_abs().min(b.unsigned_abs()), a.unsigned_abs().max(b.unsigned_abs()));
                *coeff.entry(key).or_default() += (a.signum() * b.signum()) as i64;
            }
        }
        coeff.values().all(|&c| c == 0)
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        grid: &mut Vec<i8>,
        n: usize,
        pos: usize,
        symbols: &[i8],
        types: &[usize],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        if pos == cells.len() {
            return Ok((0..n).all(|i| row_ok(grid, n, i, types)));
        }
        let (i, j) = cells[pos];
        for &s in symbols {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            grid[i * n + j] = s;
            grid[j * n + i] = -s;
            let row_done = j == n - 1;
            let ok = !row_done || (row_ok(grid, n, i, types) && (0..i).all(|r| orthogonal(grid, n, r, i)));
            if ok && fill(grid, n, pos + 1, symbols, types, nodes, budget)? {
                return Ok(true);
            }
        }
        grid[i * n + j] = 0;
        grid[j * n + i] = 0;
        Ok(false)
    }
    if fill(&mut grid, n, 0, &symbols, types, &mut nodes, budget)?
        && (0..n).all(|i| (0..i).all(|r| orthogonal(&grid, n, r, i)))
    {
        return OrthDesign::new(n, types.to_vec(), grid).map(Some);
    }
    Ok(None)
}

/// `OD(4t; 1, 1, 4t - 2)` in skew normal form from a Goethals-Seidel array
/// of circulants `x_1 I + x_3 S_1`, `x_2 I + x_3 S_2`, `x_3 M_3`, `x_3 M_4`
/// with `S_1, S_2` skew, found by exhaustive search over odd `t`.
pub fn od_from_circulants(t: usize) -> Result<OrthDesign> {
    if t.is_multiple_of(2) || t > 15 {
        return Err(Error::invalid("circulant design search covers odd t up to 15"));
    }
    let h = t / 2;
    let skew_rows: Vec<Vec<i8>> = (0u32..1 << h)
        .map(|bits| {
            let mut r = vec![0i8; t];
            for k in 1..=h {
                let x = if bits >> (k - 1) & 1 == 1 { -1 } else { 1 };
                r[k] = x;
                r[t - k] = -x;
            }
            r
        })
        .collect();
    let pm_rows: Vec<Vec<i8>> = (0u32..1 << t)
        .map(|bits| (0..t).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect())
        .collect();
    let pafs = |r: &Vec<i8>| -> Vec<i64> { (1..=h).map(|k| super::quads::paf(r, k)).collect() };
    let mut left: HashMap<Vec<i64>, (usize, usize)> = HashMap::new();
    for (i, a) in skew_rows.iter().enumerate() {
        for (j, b) in skew_rows.iter().enumerate() {
            let key: Vec<i64> = pafs(a).iter().zip(pafs(b)).map(|(x, y)| x + y).collect();
            left.entry(key).or_insert((i, j));
        }
    }
    let pm_paf: Vec<Vec<i64>> = pm_rows.iter().map(pafs).collect();
    for (c, pc) in pm_paf.iter().enumerate() {
        for (d, pd) in pm_paf.iter().enumerate() {
            let key: Vec<i64> = pc.iter().zip(pd).map(|(x, y)| -(x + y)).collect();
            if let Some(&(i, j)) = left.get(&key) {
                let var_row = |r: &[i8], diag: i8| -> Vec<i8> {
                    r.iter().enumerate().map(|(k, &x)| if k == 0 && diag != 0 { diag } else { 3 * x }).collect()
                };
                let a = var_row(&skew_rows[i], 1);
                let b = var_row(&skew_rows[j], 2);
                let c = var_row(&pm_rows[c], 0);
                let d = var_row(&pm_rows[d], 0);
                return assemble_symbolic(t, [a, b, c, d]);
            }
        }
    }
    Err(Error::NotApplicable(format!("no circulant OD(4*{t}; 1, 1, {}) found", 4 * t - 2)))
}

/// Goethals-Seidel array over symbolic circulant first rows.
fn assemble_symbolic(t: usize, rows: [Vec<i8>; 4]) -> Result<OrthDesign> {
    // Evaluate the array separately on each variable's indicator so the
    // numeric block machinery can be reused.
    let mut entries = vec![0i8; 16 * t * t];
    for var in 1..=3i8 {
        let blocks: Vec<Matrix> = rows
            .iter()
            .map(|r| {
                let ind: Vec<i8> = r.iter().map(|&e| if e.abs() == var { e.signum() } else { 0 }).collect();
                crate::exactmat::circulant(&ind)
            })
            .collect::<Result<_>>()?;
        let g = gs_array(&blocks[0], &blocks[1], &blocks[2], &blocks[3])?;
        for (slot, &v) in entries.iter_mut().zip(g.entries()) {
            if v != 0 {
                *slot = v * var;
            }
        }
    }
    OrthDesign::new(4 * t, vec![1, 1, 4 * t - 2], entries)
}

/// Skew `W` and symmetric `M`, both Hadamard, with `W M^T = M W^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmicablePair {
    pub w: SignMatrix,
    pub m: SignMatrix,
}

impl AmicablePair {
    pub fn new(w: Matrix, m: Matrix) -> Result<Self> {
        if !is_skew_hadamard(&w, false) {
            return Err(Error::check("amicable pair", "W is not skew Hadamard"));
        }
        if !m.is_symmetric() || !is_hadamard(&m, false) {
            return Err(Error::check("amicable pair", "M is not a symmetric Hadamard matrix"));
        }
        if w.matmul_wide(&m.transpose())? != m.matmul_wide(&w.transpose())? {
            return Err(Error::check("amicable pair", "W M^T differs from M W^T"));
        }
        Ok(AmicablePair { w: w.try_into()?, m: m.try_into()? })
    }

    pub fn order(&self) -> usize {
        self.w.order()
    }

    /// Lower-right blocks `P` of `W` and `D` of `M` when both have first
    /// row all ones, `W` has first column `(1, -e)` and `M` has `(1, e)`.
    pub fn normal_blocks(&self) -> Result<(Matrix, Matrix)> {
        let n = self.order();
        let normal = (0..n).all(|j| self.w.get(0, j) == 1 && self.m.get(0, j) == 1)
            && (1..n).all(|i| self.w.get(i, 0) == -1 && self.m.get(i, 0) == 1);
        if !normal {
            return Err(Error::invalid("amicable pair is not in normal form"));
        }
        let inner = |h: &Matrix| Matrix::from_fn(n - 1, n - 1, |i, j| h.get(i + 1, j + 1));
        Ok((inner(&self.w)?, inner(&self.m)?))
    }
}

/// Amicable Hadamard matrices of order `q + 1`, `q = 3 mod 4` a prime
/// power: `W = [[1, e], [-e^T, S + I]]` and `M = [[1, e], [e^T, RS - R]]`
/// with elements ordered so that `a_{q-i} = -a_i`.
pub fn amicable_hadamard(q: u64) -> Result<AmicablePair> {
    if q % 4 != 3 {
        return Err(Error::NotApplicable(format!("amicable construction needs q = 3 mod 4, got {q}")));
    }
    let f = field(q)?;
    let a = f.ordered_elements()?;
    let q = q as usize;
    let s = Matrix::from_fn(q, q, |i, j| f.chi(f.sub(a[j], a[i])))?;
    let r = Matrix::from_fn(q, q, |i, j| i8::from((i == 0 && j == 0) || (i >= 1 && j == q - i)))?;
    let p = s.add(&Matrix::identity(q))?;
    let d = r.matmul(&s)?.sub(&r)?;
    let n = q + 1;
    let border = |core: &Matrix, col: i8| {
        Matrix::from_fn(n, n, |i, j| match (i, j) {
            (0, _) => 1,
            (_, 0) => col,
            _ => core.get(i - 1, j - 1),
        })
    };
    AmicablePair::new(border(&p, -1)?, border(&d, 1)?)
}

/// Skew Hadamard matrix of order `mn(n - 1)` from `K = OD(mn; 1, m, mn-m-1)`
/// in skew normal form and amicable Hadamard matrices of order `n`: the
/// variables of `K` become `P`, `J` and `D`.
pub fn aod_skew_hadamard(m: usize, n: usize, k: &OrthDesign) -> Result<SignMatrix> {
    if m == 0 || n < 2 || k.order() != m * n || k.types() != [1, m, m * n - m - 1] {
        return Err(Error::invalid(format!(
            "{} does not have order {0} and type (1, {m}, {})",
            k.name(),
            (m * n).saturating_sub(m + 1),
        )));
    }
    if !k.is_skew_normal() {
        return Err(Error::invalid(format!("{} is not x1 I plus a skew part", k.name())));
    }
    k.verify()?;
    let pair = amicable_hadamard(n as u64 - 1)?;
    let (p, d) = pair.normal_blocks()?;
    let j = Matrix::filled(n - 1, n - 1, 1)?;
    k.substitute(&[&p, &j, &d])?.try_into()
}
