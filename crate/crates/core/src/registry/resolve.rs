use serde::Serialize;
use serde_json::{json, Value};

use super::table::{Method, MethodFilter, MethodKind};
use crate::arith::{divisors, is_prime_power, prime_power};
use crate::catalog::{self, Catalog};
use crate::constructions::families::{
    cooper_wallis_with, good_available, good_matrices_hadamard, williamson_available, williamson_hadamard,
};
use crate::constructions::{
    aod_skew_hadamard, cds_skew_hadamard, double, hadamard_from_sds, miyamoto, paley_i, paley_ii, spence_hadamard,
    spence_skew,
};
use crate::constructions::skew::cyclic_cds_exists;
use crate::diffsets::{cds, cds_exists, spence_sds_exists};
use crate::error::{Error, Result};
use crate::exactmat::{is_hadamard, is_skew_hadamard, Matrix, SignMatrix};

/// One row of the dispatch registry.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionRecord {
    pub order: usize,
    pub skew: bool,
    pub method: Method,
    pub params: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Constructed,
    ExistsOnly,
    /// The order is open: no construction is known.
    UnknownOrder,
    /// A construction is known but the data it needs is not shipped.
    NotImplemented,
}

/// The answer of a resolver call. `matrix` is present iff the status is
/// [`Status::Constructed`].
#[derive(Clone, Debug)]
pub struct ResolveOutcome {
    pub status: Status,
    pub matrix: Option<SignMatrix>,
    /// Top-level method that builds (or would build) the matrix.
    pub method: Option<Method>,
    /// Full recipe, e.g. `Double(Double(PaleyI))`.
    pub recipe: Option<String>,
    /// The table's preferred method for the odd core, if any.
    pub preferred: Option<Method>,
    /// True when the preferred method was replaced by another one.
    pub fallback: bool,
    pub note: Option<String>,
}

/// Options for [`resolve`].
#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    pub skew: bool,
    /// Answer without building the matrix.
    pub existence: bool,
    /// Assert the final Hadamard (or skew Hadamard) property.
    pub check: bool,
    /// Restrict the top-level construction.
    pub method: Option<MethodFilter>,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { skew: false, existence: false, check: true, method: None }
    }
}

#[derive(Clone, Debug)]
enum Plan {
    Base(usize),
    Double(Box<Plan>),
    Direct { n: usize, method: Method, sub: Option<Box<Plan>> },
}

impl Plan {
    fn top(&self) -> Method {
        match self {
            Plan::Base(_) => Method::PaleyI,
            Plan::Double(_) => Method::Double,
            Plan::Direct { method, .. } => *method,
        }
    }

    fn uses(&self, m: Method) -> bool {
        match self {
            Plan::Base(_) => false,
            Plan::Double(sub) => sub.uses(m),
            Plan::Direct { method, sub, .. } => *method == m || sub.as_ref().is_some_and(|s| s.uses(m)),
        }
    }

    fn describe(&self) -> String {
        match self {
            Plan::Base(k) => format!("Base({k})"),
            Plan::Double(sub) => format!("Double({})", sub.describe()),
            Plan::Direct { method, sub: Some(sub), .. } => format!("{method}[{}]", sub.describe()),
            Plan::Direct { method, .. } => method.to_string(),
        }
    }
}

enum Planned {
    Found(Plan),
    Unknown,
    Missing { reason: String },
}

fn rejected(order: usize) -> Error {
    Error::invalid(format!("order {order} is neither 1, 2 nor a multiple of 4"))
}

/// Preference order after the table's entry.
const FALLBACK_PLAIN: [MethodKind; 11] = [
    MethodKind::PaleyI,
    MethodKind::PaleyII,
    MethodKind::Will,
    MethodKind::SDS,
    MethodKind::Miy,
    MethodKind::CW,
    MethodKind::Good,
    MethodKind::GS,
    MethodKind::CDS,
    MethodKind::Spence,
    MethodKind::AOD,
];

const FALLBACK_SKEW: [MethodKind; 7] = [
    MethodKind::PaleyI,
    MethodKind::Good,
    MethodKind::GS,
    MethodKind::SDS,
    MethodKind::CDS,
    MethodKind::Spence,
    MethodKind::AOD,
];

struct Planner<'a> {
    cat: &'a Catalog,
}

impl Planner<'_> {
    fn plan(&self, order: usize, skew: bool, filter: Option<MethodFilter>) -> Result<Planned> {
        match order {
            0 => return Err(rejected(0)),
            1 | 2 => {
                return Ok(match filter {
                    None => Planned::Found(Plan::Base(order)),
                    Some(f) => Planned::Missing {
                        reason: format!("order {order} is built directly, not by {f}"),
                    },
                })
            }
            _ if !order.is_multiple_of(4) => return Err(rejected(order)),
            _ => {}
        }
        let n = order / 4;
        if n.is_multiple_of(2) {
            return self.plan_even(order, skew, filter);
        }
        let preferred = match self.cat.dispatch.lookup(n as u32, skew) {
            Some(None) => return Ok(Planned::Unknown),
            Some(Some(m)) => Some(m),
            None => None,
        };
        for m in self.candidates(n, skew, preferred) {
            if filter.is_some_and(|f| !f.accepts(m)) {
                continue;
            }
            if let Some(p) = self.direct(n, skew, m)? {
                return Ok(Planned::Found(p));
            }
        }
        let reason = match (filter, preferred) {
            (Some(f), _) => format!("{f} does not apply to order {order} with the shipped data"),
            (None, Some(p)) => format!("{p} needs reference data that is not in the catalog, and no other method applies"),
            (None, None) => format!("no implemented construction covers order {order}"),
        };
        Ok(Planned::Missing { reason })
    }

    fn plan_even(&self, order: usize, skew: bool, filter: Option<MethodFilter>) -> Result<Planned> {
        let n = order / 4;
        let mut missing = None;
        if filter.is_none_or(|f| f.kind == MethodKind::Double) {
            match self.plan(order / 2, skew, None)? {
                Planned::Found(p) => return Ok(Planned::Found(Plan::Double(Box::new(p)))),
                Planned::Unknown => return Ok(Planned::Unknown),
                m @ Planned::Missing { .. } => missing = Some(m),
            }
        }
        for m in [Method::PaleyI, Method::PaleyII] {
            if filter.is_some_and(|f| !f.accepts(m)) {
                continue;
            }
            if let Some(p) = self.direct(n, skew, m)? {
                return Ok(Planned::Found(p));
            }
        }
        Ok(missing.unwrap_or_else(|| Planned::Missing {
            reason: format!("{} does not apply to order {order}", filter.map_or("no method".into(), |f| f.to_string())),
        }))
    }

    /// Concrete methods to try for odd `n`, preferred first.
    fn candidates(&self, n: usize, skew: bool, preferred: Option<Method>) -> Vec<Method> {
        let mut out: Vec<Method> = preferred.into_iter().collect();
        let kinds: &[MethodKind] = if skew { &FALLBACK_SKEW } else { &FALLBACK_PLAIN };
        let mut kinds = kinds.to_vec();
        if let Some(p) = preferred {
            kinds.retain(|&k| k != p.kind());
            kinds.insert(0, p.kind());
        }
        for k in kinds {
            for m in self.expand(n, k) {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    fn expand(&self, n: usize, kind: MethodKind) -> Vec<Method> {
        match kind {
            MethodKind::PaleyI => vec![Method::PaleyI],
            MethodKind::PaleyII => vec![Method::PaleyII],
            MethodKind::Will => vec![Method::Will],
            MethodKind::GS => vec![Method::GS],
            MethodKind::SDS => vec![Method::SDS],
            MethodKind::Good => vec![Method::Good],
            MethodKind::Miy => vec![Method::Miy],
            MethodKind::CDS => vec![Method::CDS],
            MethodKind::Double => vec![],
            MethodKind::CW => divisors(n as u64).into_iter().map(|t| Method::CW(t as u32)).collect(),
            MethodKind::Spence => spence_q(n).map(Method::Spence).into_iter().collect(),
            MethodKind::AOD => self
                .cat
                .designs
                .iter()
                .filter_map(|d| aod_shape(d.order(), d.types()))
                .filter(|&(m, k)| (m * k * (k - 1)) as usize == 4 * n)
                .map(|(m, k)| Method::AOD(m, k))
                .collect(),
        }
    }

    /// A plan for `method` at order `4n`, when its preconditions and data are
    /// all in place.
    fn direct(&self, n: usize, skew: bool, method: Method) -> Result<Option<Plan>> {
        let cat = self.cat;
        let nn = n as u64;
        let ok = match method {
            Method::PaleyI => is_prime_power(4 * nn - 1),
            Method::PaleyII => !skew && (2 * nn - 1) % 4 == 1 && is_prime_power(2 * nn - 1),
            Method::Will => !skew && williamson_available(cat, n),
            Method::CW(t) => {
                let t = t as usize;
                !skew
                    && n % 2 == 1
                    && t > 0
                    && n.is_multiple_of(t)
                    && cat.sequences.t_sequences(t).is_ok()
                    && williamson_available(cat, n / t)
            }
            Method::Good => good_available(cat, n),
            Method::GS => n % 2 == 1 && (cat.good.contains_key(&n) || cat.sds_family(n as u32, true).is_some()),
            Method::SDS => {
                let v = n as u32;
                cat.sds_family(v, true).is_some()
                    || (!skew && (cat.sds_family(v, false).is_some() || spence_sds_exists(nn)))
            }
            Method::CDS => n % 2 == 1 && cds_exists(2 * nn - 1),
            Method::Spence(q) => spence_q(n) == Some(q) && cyclic_cds_exists(nn),
            Method::AOD(m, k) => {
                (m * k * (k.saturating_sub(1))) as usize == 4 * n
                    && prime_power(k as u64 - 1).is_some() && ((k - 1) % 4 == 3)
                    && cat.design((m * k) as usize, &[1, m as usize, (m * k - m - 1) as usize]).is_some()
            }
            Method::Miy => {
                if skew || nn % 4 != 1 || !is_prime_power(nn) {
                    false
                } else {
                    return Ok(match self.plan(n - 1, false, None)? {
                        Planned::Found(sub) => Some(Plan::Direct { n, method, sub: Some(Box::new(sub)) }),
                        _ => None,
                    });
                }
            }
            Method::Double => false,
        };
        Ok(ok.then_some(Plan::Direct { n, method, sub: None }))
    }

    fn build(&self, plan: &Plan, skew: bool) -> Result<SignMatrix> {
        let cat = self.cat;
        match plan {
            Plan::Base(1) => Matrix::from_rows(&[[1i8]])?.try_into(),
            Plan::Base(_) if skew => Matrix::from_rows(&[[1i8, 1], [-1, 1]])?.try_into(),
            Plan::Base(_) => Matrix::from_rows(&[[1i8, 1], [1, -1]])?.try_into(),
            Plan::Double(sub) => double(self.build(sub, skew)?.as_matrix(), skew),
            Plan::Direct { n, method, sub } => {
                let n = *n;
                let nn = n as u64;
                match *method {
                    Method::PaleyI => paley_i(4 * nn - 1),
                    Method::PaleyII => paley_ii(2 * nn - 1),
                    Method::Will => williamson_hadamard(n),
                    Method::CW(t) => cooper_wallis_with(t as usize, n),
                    Method::Good => good_matrices_hadamard(n),
                    Method::GS => match cat.sds_family(n as u32, true) {
                        _ if cat.good.contains_key(&n) => good_matrices_hadamard(n),
                        Some(f) => hadamard_from_sds(f),
                        None => Err(Error::NotApplicable(format!("no GS data for n = {n}"))),
                    },
                    Method::SDS => {
                        let v = n as u32;
                        if let Some(f) = cat.sds_family(v, true) {
                            hadamard_from_sds(f)
                        } else if let Some(f) = cat.sds_family(v, false).filter(|_| !skew) {
                            hadamard_from_sds(f)
                        } else {
                            spence_hadamard((nn - 1) / 2)
                        }
                    }
                    Method::CDS => cds_skew_hadamard(&cds(2 * nn - 1, None)?),
                    Method::Spence(q) => spence_skew(q),
                    Method::AOD(m, k) => {
                        let d = cat
                            .design((m * k) as usize, &[1, m as usize, (m * k - m - 1) as usize])
                            .ok_or_else(|| Error::NotApplicable(format!("no design for {method}")))?;
                        aod_skew_hadamard(m as usize, k as usize, d)
                    }
                    Method::Miy => {
                        let sub = sub.as_ref().ok_or_else(|| Error::invalid("Miyamoto plan lacks its input"))?;
                        miyamoto(nn, &self.build(sub, false)?)
                    }
                    Method::Double => Err(Error::invalid("Double is not a direct method")),
                }
            }
        }
    }
}

fn spence_q(n: usize) -> Option<u64> {
    let n = n as u64;
    (1..=n).take_while(|q| 1 + q + q * q <= n).find(|q| 1 + q + q * q == n && is_prime_power(*q))
}

/// `(m, k)` when a design of the given order and types is an
/// `OD(mk; 1, m, mk - m - 1)`.
fn aod_shape(order: usize, types: &[usize]) -> Option<(u32, u32)> {
    let [1, m, rest] = *types else { return None };
    (m > 0 && order.is_multiple_of(m) && rest + m + 1 == order).then(|| (m as u32, (order / m) as u32))
}

fn params_for(n: usize, method: Method) -> Value {
    let nn = n as u64;
    match method {
        Method::PaleyI => json!({ "q": 4 * nn - 1 }),
        Method::PaleyII => json!({ "q": 2 * nn - 1 }),
        Method::Will | Method::Good | Method::GS => json!({ "n": n }),
        Method::SDS => json!({ "v": n }),
        Method::CW(t) => json!({ "t": t, "w": n / (t.max(1) as usize) }),
        Method::Miy => json!({ "q": n, "input_order": n - 1 }),
        Method::CDS => json!({ "v": 2 * nn - 1 }),
        Method::Spence(q) => json!({ "q": q, "v": n }),
        Method::AOD(m, k) => json!({ "m": m, "n": k }),
        Method::Double => json!({ "half_order": 2 * n }),
    }
}

/// The table entry for odd `n`: `Ok(None)` for a blank (open) cell.
pub fn resolve_method(n: usize, skew: bool) -> Result<Option<ConstructionRecord>> {
    let cat = catalog::global()?;
    if n.is_multiple_of(2) || n == 0 || n > cat.dispatch.max_n(skew) as usize {
        return Err(Error::invalid(format!(
            "n must be odd and between 1 and {}, got {n}",
            cat.dispatch.max_n(skew)
        )));
    }
    let cell = cat
        .dispatch
        .lookup(n as u32, skew)
        .ok_or_else(|| Error::invalid(format!("dispatch table has no row for n = {n}")))?;
    Ok(cell.map(|method| ConstructionRecord {
        order: 4 * n,
        skew,
        method,
        params: params_for(n, method),
    }))
}

/// Resolve `order` under `opts`. Open orders and missing data are statuses;
/// malformed orders and failed checks are errors.
pub fn resolve(order: usize, opts: ResolveOptions) -> Result<ResolveOutcome> {
    let planner = Planner { cat: catalog::global()? };
    let core = core_odd(order);
    let preferred = core.and_then(|n| planner.cat.dispatch.lookup(n as u32, opts.skew).flatten());
    let empty = |status, note: Option<String>| ResolveOutcome {
        status,
        matrix: None,
        method: None,
        recipe: None,
        preferred,
        fallback: false,
        note,
    };
    let plan = match planner.plan(order, opts.skew, opts.method)? {
        Planned::Found(p) => p,
        Planned::Unknown => {
            let what = if opts.skew { "skew Hadamard" } else { "Hadamard" };
            return Ok(empty(
                Status::UnknownOrder,
                Some(format!("no {what} matrix of order {order} is known")),
            ));
        }
        Planned::Missing { reason, .. } => return Ok(empty(Status::NotImplemented, Some(reason))),
    };
    let mut out = ResolveOutcome {
        status: Status::ExistsOnly,
        matrix: None,
        method: Some(plan.top()),
        recipe: Some(plan.describe()),
        preferred,
        fallback: preferred.is_some_and(|p| !plan.uses(p)),
        note: None,
    };
    if out.fallback {
        out.note = Some(format!(
            "preferred {} unavailable, used {}",
            preferred.expect("fallback implies a preference"),
            plan.describe()
        ));
    }
    if opts.existence {
        return Ok(out);
    }
    let h = planner.build(&plan, opts.skew)?;
    if h.order() != order {
        return Err(Error::check(plan.describe(), format!("built order {} instead of {order}", h.order())));
    }
    if opts.check {
        let ok = if opts.skew { is_skew_hadamard(&h, false) } else { is_hadamard(&h, false) };
        if !ok {
            let what = if opts.skew { "skew Hadamard" } else { "Hadamard" };
            return Err(Error::check(plan.describe(), format!("result is not {what}")));
        }
    }
    out.status = Status::Constructed;
    out.matrix = Some(h);
    Ok(out)
}

/// The odd part `n` of `order / 4`, for multiples of four.
fn core_odd(order: usize) -> Option<usize> {
    if order == 0 || !order.is_multiple_of(4) {
        return None;
    }
    let mut n = order / 4;
    while n.is_multiple_of(2) {
        n /= 2;
    }
    Some(n)
}

pub fn hadamard_matrix(order: usize, existence: bool, check: bool) -> Result<ResolveOutcome> {
    resolve(order, ResolveOptions { skew: false, existence, check, method: None })
}

pub fn skew_hadamard_matrix(order: usize, existence: bool, check: bool) -> Result<ResolveOutcome> {
    resolve(order, ResolveOptions { skew: true, existence, check, method: None })
}
