//! Acceptance criteria 1-9, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use hadamard::catalog::{self, Catalog};
use hadamard::constructions::{aod_skew_hadamard, search_skew_od};
use hadamard::diffsets::{
    cds, rds_from_homomorphism, rds_from_m_sequence, singer_difference_set, spence_sds, spence_sds_exists,
    AbelianGroup, CdsVariant, SubsetFamily,
};
use hadamard::exactmat::{determinant, is_hadamard, is_skew_hadamard, Matrix};
use hadamard::registry::{hadamard_matrix, resolve_method, skew_hadamard_matrix, Method, Status};
use hadamard::seqfam::{t_sequences_from_turyn, SeqFamily, SeqKind};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("coverage up to order 256", coverage),
        ("skew coverage", skew_coverage),
        ("dispatch fidelity", dispatch_fidelity),
        ("checker soundness", checker_soundness),
        ("sequence identities", sequence_identities),
        ("difference-set oracles", difference_sets),
        ("determinant maximality", determinants),
        ("order-756 pipeline", order_756),
        ("catalog re-verification", catalog_reverification),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1} s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1} s) {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `H H^T = nI` by plain integer arithmetic.
fn gram_ok(h: &Matrix) -> bool {
    let n = h.rows();
    if h.cols() != n || h.entries().iter().any(|&v| v != 1 && v != -1) {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let dot: i64 = (0..n).map(|k| (h.get(i, k) * h.get(j, k)) as i64).sum();
            dot == if i == j { n as i64 } else { 0 }
        })
    })
}

fn skew_ok(h: &Matrix) -> bool {
    let n = h.rows();
    gram_ok(h) && (0..n).all(|i| (0..n).all(|j| h.get(i, j) + h.get(j, i) == if i == j { 2 } else { 0 }))
}

const PLAIN_OPEN: [usize; 3] = [668, 716, 892];
const SKEW_OPEN: [usize; 25] = [
    356, 404, 428, 476, 596, 612, 668, 708, 712, 716, 764, 772, 804, 808, 820, 836, 856, 892, 900, 916, 932, 940, 952,
    980, 996,
];

fn coverage() -> Outcome {
    let start = Instant::now();
    let mut built = 0;
    let mut missing = Vec::new();
    for order in [1, 2].into_iter().chain((4..=256).step_by(4)) {
        let out = hadamard_matrix(order, false, true).map_err(|e| format!("order {order}: {e}"))?;
        match out.status {
            Status::Constructed => {
                let h = out.matrix.as_ref().ok_or("constructed without a matrix")?;
                ensure(h.order() == order && gram_ok(h), || format!("order {order} fails the Gram check"))?;
                built += 1;
            }
            Status::NotImplemented => {
                let n = order / 4;
                let table = resolve_method(n, false).map_err(|e| e.to_string())?.map(|r| r.method);
                let named = out.note.as_deref().unwrap_or("");
                ensure(
                    table.is_some() && out.preferred == table && named.contains(&table.unwrap().to_string()),
                    || format!("order {order} is not implemented without naming its table method"),
                )?;
                missing.push(format!("{order} ({})", table.unwrap()));
            }
            s => return Err(format!("order {order}: unexpected status {s:?}")),
        }
    }
    for order in PLAIN_OPEN {
        let out = hadamard_matrix(order, true, true).map_err(|e| e.to_string())?;
        ensure(out.status == Status::UnknownOrder, || format!("order {order} should be open"))?;
    }
    let mut open = Vec::new();
    for order in (4..=1000).step_by(4) {
        if hadamard_matrix(order, true, true).map_err(|e| e.to_string())?.status == Status::UnknownOrder {
            open.push(order);
        }
    }
    ensure(open == PLAIN_OPEN, || format!("open Hadamard orders <= 1000: {open:?}"))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("sweep took {took:.1?}"))?;
    Ok(format!("{built} built and verified; not implemented: {}", missing.join(", ")))
}

fn skew_coverage() -> Outcome {
    let start = Instant::now();
    let mut built = 0;
    let mut incomplete = Vec::new();
    for n in (1..=63).step_by(2) {
        let Some(rec) = resolve_method(n, true).map_err(|e| e.to_string())? else {
            continue;
        };
        let order = 4 * n;
        let plan = skew_hadamard_matrix(order, true, true).map_err(|e| e.to_string())?;
        if plan.status == Status::NotImplemented {
            incomplete.push(format!("{n} ({})", rec.method));
            continue;
        }
        let out = skew_hadamard_matrix(order, false, true).map_err(|e| format!("n = {n}: {e}"))?;
        let h = out.matrix.ok_or_else(|| format!("n = {n} not constructed"))?;
        ensure(skew_ok(&h), || format!("n = {n} fails the skew check"))?;
        built += 1;
    }
    let mut open = Vec::new();
    for order in (4..=1000).step_by(4) {
        if skew_hadamard_matrix(order, true, true).map_err(|e| e.to_string())?.status == Status::UnknownOrder {
            open.push(order);
        }
    }
    ensure(open == SKEW_OPEN, || format!("open skew orders <= 1000: {open:?}"))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(120), || format!("took {took:.1?}"))?;
    Ok(format!("{built} built and verified; data-incomplete: {}", incomplete.join(", ")))
}

/// Independent transcription of the two order tables, ten cells per line.
const TABLE_PLAIN: &[&str] = &[
    "1 PaleyI | 3 PaleyI | 5 PaleyI | 7 PaleyI | 9 PaleyII | 11 PaleyI | 13 PaleyII | 15 PaleyI | 17 PaleyI | 19 PaleyII",
    "21 PaleyI | 23 Will | 25 PaleyII | 27 PaleyI | 29 Will | 31 PaleyII | 33 PaleyI | 35 PaleyI | 37 PaleyII | 39 Will",
    "41 PaleyI | 43 Will | 45 PaleyI | 47 CW(47) | 49 PaleyII | 51 PaleyII | 53 PaleyI | 55 PaleyII | 57 PaleyI | 59 CW(59)",
    "61 PaleyI | 63 PaleyI | 65 CW(5) | 67 CW(67) | 69 PaleyII | 71 PaleyI | 73 Miy | 75 PaleyII | 77 PaleyI | 79 PaleyII",
    "81 CW(3) | 83 PaleyI | 85 PaleyII | 87 PaleyI | 89 CW(89) | 91 PaleyII | 93 CW(3) | 95 PaleyI | 97 PaleyII | 99 PaleyII",
    "101 Miy | 103 SDS | 105 PaleyI | 107 CW(107) | 109 Miy | 111 PaleyI | 113 Miy | 115 PaleyII | 117 PaleyI | 119 CW(7)",
    "121 PaleyII | 123 PaleyI | 125 PaleyI | 127 SDS | 129 PaleyII | 131 PaleyI | 133 CW(7) | 135 PaleyII | 137 PaleyI | 139 PaleyII",
    "141 PaleyI | 143 PaleyI | 145 PaleyII | 147 PaleyI | 149 Miy | 151 SDS | 153 CW(3) | 155 PaleyI | 157 PaleyII | 159 PaleyII",
    "161 PaleyI | 163 SDS | 165 PaleyI | 167 - | 169 PaleyII | 171 PaleyI | 173 PaleyI | 175 PaleyII | 177 PaleyII | 179 -",
    "181 PaleyII | 183 CW(3) | 185 PaleyI | 187 PaleyII | 189 CW(3) | 191 SDS | 193 Miy | 195 PaleyII | 197 PaleyI | 199 PaleyII",
    "201 PaleyII | 203 PaleyI | 205 PaleyII | 207 PaleyI | 209 CW(11) | 211 PaleyII | 213 CW(71) | 215 PaleyI | 217 PaleyII | 219 SDS",
    "221 PaleyI | 223 - | 225 PaleyII | 227 PaleyI | 229 PaleyII | 231 PaleyII | 233 Miy | 235 CW(47) | 237 PaleyI | 239 SDS",
    "241 Miy | 243 PaleyI | 245 CW(5) | 247 CW(13) | 249 CW(83)",
];

const TABLE_SKEW: &[&str] = &[
    "1 Good | 3 Good | 5 Good | 7 Good | 9 Good | 11 Good | 13 Good | 15 Good | 17 Good | 19 Good",
    "21 Good | 23 Good | 25 Good | 27 Good | 29 Good | 31 Good | 33 PaleyI | 35 PaleyI | 37 SDS | 39 SDS",
    "41 PaleyI | 43 SDS | 45 PaleyI | 47 GS | 49 SDS | 51 CDS | 53 PaleyI | 55 CDS | 57 PaleyI | 59 GS",
    "61 PaleyI | 63 PaleyI | 65 SDS | 67 SDS | 69 GS | 71 PaleyI | 73 SDS | 75 CDS | 77 PaleyI | 79 CDS",
    "81 SDS | 83 PaleyI | 85 CDS | 87 PaleyI | 89 - | 91 CDS | 93 SDS | 95 PaleyI | 97 SDS | 99 CDS",
    "101 - | 103 SDS | 105 PaleyI | 107 - | 109 SDS | 111 PaleyI | 113 SDS | 115 CDS | 117 PaleyI | 119 -",
    "121 SDS | 123 PaleyI | 125 PaleyI | 127 SDS | 129 SDS | 131 PaleyI | 133 SDS | 135 CDS | 137 PaleyI | 139 CDS",
    "141 PaleyI | 143 PaleyI | 145 SDS | 147 PaleyI | 149 - | 151 SDS | 153 - | 155 PaleyI | 157 SDS | 159 CDS",
    "161 PaleyI | 163 SDS | 165 PaleyI | 167 - | 169 SDS | 171 PaleyI | 173 PaleyI | 175 CDS | 177 - | 179 -",
    "181 SDS | 183 Spence(13) | 185 PaleyI | 187 CDS | 189 AOD(1, 28) | 191 - | 193 - | 195 CDS | 197 PaleyI | 199 CDS",
    "201 - | 203 PaleyI | 205 - | 207 PaleyI | 209 - | 211 CDS | 213 SDS | 215 PaleyI | 217 SDS | 219 SDS",
    "221 PaleyI | 223 - | 225 - | 227 PaleyI | 229 - | 231 CDS | 233 - | 235 - | 237 PaleyI | 239 SDS",
    "241 SDS | 243 PaleyI | 245 - | 247 SDS | 249 -",
];

fn expected(lines: &[&str]) -> BTreeMap<usize, String> {
    lines
        .iter()
        .flat_map(|l| l.split(" | "))
        .map(|cell| {
            let (n, m) = cell.split_once(' ').expect("cell has a number and a method");
            (n.parse().expect("cell number"), m.to_string())
        })
        .collect()
}

fn dispatch_fidelity() -> Outcome {
    let mut checked = 0;
    for (skew, lines) in [(false, TABLE_PLAIN), (true, TABLE_SKEW)] {
        let want = expected(lines);
        ensure(want.keys().copied().eq((1..=249).step_by(2)), || "oracle does not cover odd n <= 249".into())?;
        for (n, cell) in want {
            let got = resolve_method(n, skew).map_err(|e| format!("n = {n}: {e}"))?;
            let got = got.map_or_else(|| "-".to_string(), |r| r.method.to_string());
            ensure(got == cell, || format!("n = {n} skew = {skew}: table {cell}, resolver {got}"))?;
            checked += 1;
        }
    }
    ensure(resolve_method(47, false).unwrap().unwrap().method == Method::CW(47), || "CW(47)".into())?;
    Ok(format!("{checked} cells match"))
}

fn signed_permutation(rng: &mut ChaCha8Rng, n: usize) -> (Vec<usize>, Vec<i8>) {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    let s = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    (p, s)
}

fn checker_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut bases = Vec::new();
    for order in [4, 8, 12] {
        let h = skew_hadamard_matrix(order, false, true).map_err(|e| e.to_string())?.matrix.unwrap();
        bases.push(h.into_inner());
    }
    let (mut hadamard_hits, mut skew_hits) = (0, 0);
    for trial in 0..1000 {
        let base = &bases[trial % 3];
        let n = base.rows();
        let m = match trial % 4 {
            0 => Matrix::from_fn(n, n, |_, _| if rng.gen_bool(0.5) { 1 } else { -1 }).unwrap(),
            1 => {
                let (pr, sr) = signed_permutation(&mut rng, n);
                let (pc, sc) = signed_permutation(&mut rng, n);
                Matrix::from_fn(n, n, |i, j| sr[i] * sc[j] * base.get(pr[i], pc[j])).unwrap()
            }
            _ => {
                // P H P^T with a signed permutation keeps skewness.
                let (p, s) = signed_permutation(&mut rng, n);
                let mut m = Matrix::from_fn(n, n, |i, j| s[i] * s[j] * base.get(p[i], p[j])).unwrap();
                if trial % 4 == 3 {
                    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    m.set(i, j, -m.get(i, j)).unwrap();
                }
                m
            }
        };
        let direct = gram_ok(&m);
        let direct_skew = skew_ok(&m);
        ensure(is_hadamard(&m, false) == direct, || format!("is_hadamard disagrees on trial {trial}"))?;
        ensure(is_skew_hadamard(&m, false) == direct_skew, || format!("is_skew_hadamard disagrees on trial {trial}"))?;
        hadamard_hits += direct as usize;
        skew_hits += direct_skew as usize;
    }
    Ok(format!("1000 matrices, 0 disagreements ({hadamard_hits} Hadamard, {skew_hits} skew)"))
}

fn npaf(a: &[i8], j: usize) -> i64 {
    (0..a.len().saturating_sub(j)).map(|i| (a[i] * a[i + j]) as i64).sum()
}

fn identity_holds(f: &SeqFamily) -> bool {
    let w: [i64; 4] = match f.kind {
        SeqKind::TurynType => [1, 1, 2, 2],
        SeqKind::Turyn | SeqKind::Base | SeqKind::TSequence => [1, 1, 1, 1],
    };
    let longest = f.members.iter().map(Vec::len).max().unwrap_or(0);
    let sums_vanish = (1..longest).all(|j| f.members.iter().zip(w).map(|(m, wi)| wi * npaf(m, j)).sum::<i64>() == 0);
    if f.kind != SeqKind::TSequence {
        return sums_vanish && f.members.iter().flatten().all(|&v| v == 1 || v == -1);
    }
    let t = f.members[0].len();
    let one_per_column = (0..t).all(|i| f.members.iter().filter(|m| m[i] != 0).count() == 1);
    sums_vanish && one_per_column && f.members.iter().all(|m| m.len() == t)
}

fn sequence_identities() -> Outcome {
    let cat = catalog::global().map_err(|e| e.to_string())?;
    let seqs = &cat.sequences;
    let mut checked = 0;
    for l in seqs.turyn_lengths().collect::<Vec<_>>() {
        let f = seqs.turyn(l).map_err(|e| e.to_string())?;
        ensure(identity_holds(&f), || format!("Turyn l = {l}"))?;
        checked += 1;
    }
    for n in seqs.turyn_type_lengths().collect::<Vec<_>>() {
        let f = seqs.turyn_type(n).map_err(|e| e.to_string())?;
        ensure(identity_holds(&f), || format!("Turyn type n = {n}"))?;
        checked += 1;
    }
    for (n, p) in seqs.base_shapes() {
        let f = seqs.base(n, p).map_err(|e| e.to_string())?;
        ensure(identity_holds(&f), || format!("base ({n}, {p})"))?;
        checked += 1;
    }
    let reachable = seqs.reachable_t(131);
    for &t in &reachable {
        let f = seqs.t_sequences(t).map_err(|e| e.to_string())?;
        ensure(f.members[0].len() == t && identity_holds(&f), || format!("T-sequences t = {t}"))?;
    }
    let mut thm_lengths = Vec::new();
    for l in [2, 3, 4, 5, 6, 7, 8, 13, 15] {
        let turyn = seqs.turyn(l).map_err(|e| format!("Turyn l = {l}: {e}"))?;
        let t = t_sequences_from_turyn(&turyn).map_err(|e| e.to_string())?;
        ensure(t.members[0].len() == 4 * l - 1 && identity_holds(&t), || format!("4l - 1 route at l = {l}"))?;
        thm_lengths.push(4 * l - 1);
    }
    Ok(format!(
        "{checked} catalog families; {} reachable t <= 131; 4l-1 lengths {thm_lengths:?}",
        reachable.len()
    ))
}

/// `lambda` of a family by exhaustive difference counting, or `None` when the
/// counts differ between nonzero elements.
fn brute_lambda(group: &AbelianGroup, sets: &[Vec<u32>]) -> Option<u64> {
    let v = group.order() as usize;
    let mut count = vec![0u64; v];
    for s in sets {
        for &x in s {
            for &y in s {
                if x != y {
                    count[group.sub(x, y) as usize] += 1;
                }
            }
        }
    }
    let values: BTreeSet<u64> = count[1..].iter().copied().collect();
    (values.len() == 1).then(|| *values.iter().next().unwrap())
}

fn family_ok(f: &SubsetFamily) -> bool {
    brute_lambda(&f.group, &f.sets) == Some(f.lambda)
}

fn difference_sets() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: String| {
        checked += 1;
        if !ok {
            failures.push(what);
        }
    };
    for v in 3..=200u64 {
        for var in CdsVariant::ALL.into_iter().filter(|var| var.applies(v)) {
            match cds(v, Some(var)) {
                Ok(p) => {
                    let m = p.m() as usize;
                    let sizes_ok = p.a.len() == m && p.b.len() == m && p.group.order() as u64 == v;
                    let lambda = brute_lambda(&p.group, &[p.a.clone(), p.b.clone()]);
                    check(sizes_ok && lambda == Some(m as u64 - 1), format!("CDS v = {v} {var}"));
                }
                Err(e) => check(false, format!("CDS v = {v} {var}: {e}")),
            }
        }
    }
    for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13] {
        for n in 2..8u32 {
            let order = (q as u64).pow(n) - 1;
            if order > 200 {
                break;
            }
            let Ok(base) = rds_from_m_sequence(q, n) else {
                check(false, format!("RDS q = {q} N = {n}"));
                continue;
            };
            let mut variants = vec![base];
            for d in 2..q {
                if (q - 1) % d == 0 {
                    match rds_from_homomorphism(q, n, d) {
                        Ok(r) => variants.push(r),
                        Err(e) => check(false, format!("RDS q = {q} N = {n} d = {d}: {e}")),
                    }
                }
            }
            for r in variants {
                let g = r.m * r.n;
                let mut count = vec![0u64; g as usize];
                for &x in &r.elements {
                    for &y in &r.elements {
                        if x != y {
                            count[((x + g - y) % g) as usize] += 1;
                        }
                    }
                }
                let ok = r.elements.len() as u64 == r.k
                    && (1..g).all(|e| count[e as usize] == if e % r.m == 0 { 0 } else { r.d });
                check(ok, format!("RDS {}", r.params()));
            }
        }
    }
    let admissible: Vec<u64> = (3..2000).filter(|&q| spence_sds_exists(q)).collect();
    for &q in &admissible {
        if q - 1 > 200 {
            break;
        }
        match spence_sds(q) {
            Ok(f) => check(family_ok(&f), format!("Spence SDS q = {q}")),
            Err(e) => check(false, format!("Spence SDS q = {q}: {e}")),
        }
    }
    for &q in admissible.iter().take(2) {
        let f = spence_sds(q).map_err(|e| e.to_string())?;
        check(family_ok(&f) && f.order() as u64 == q - 1, format!("Spence SDS smallest q = {q}"));
    }
    for q in [2u64, 3] {
        let v = q.pow(4) + q * q + 1;
        let s: Vec<u32> = singer_difference_set(q).map_err(|e| e.to_string())?.iter().map(|&x| x as u32).collect();
        let ok = s.len() as u64 == q * q + 1 && brute_lambda(&AbelianGroup::cyclic(v as u32), &[s]) == Some(1);
        check(ok, format!("Singer q = {q}"));
    }
    let cat = catalog::global().map_err(|e| e.to_string())?;
    for ((n, skew), (_, fam)) in &cat.sds {
        if *n <= 200 {
            check(family_ok(fam) && (!skew || fam.is_skew()), format!("catalog SDS n = {n}"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} objects cross-checked, 0 failures"))
    } else {
        Err(format!("{} of {checked} failed: {}", failures.len(), failures.join("; ")))
    }
}

fn determinants() -> Outcome {
    for order in [4usize, 8, 12, 16, 20] {
        let h = hadamard_matrix(order, false, true).map_err(|e| e.to_string())?.matrix.unwrap();
        let det = determinant(&h);
        let want = BigInt::from(order).pow(order as u32 / 2);
        ensure(det == want || det == -want.clone(), || format!("order {order}: det {det}"))?;
    }
    Ok("orders 4, 8, 12, 16, 20".into())
}

fn order_756() -> Outcome {
    let cat = catalog::global().map_err(|e| e.to_string())?;
    let k = cat.design(28, &[1, 1, 26]).ok_or("catalog lacks OD(28; 1, 1, 26)")?;
    let start = Instant::now();
    let h = aod_skew_hadamard(1, 28, k).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(h.order() == 756 && is_skew_hadamard(&h, false), || "order 756 fails the skew check".into())?;
    ensure(took < Duration::from_secs(10), || format!("order 756 took {took:.1?}"))?;
    let small = search_skew_od(4, &[1, 1, 2], 1_000_000).map_err(|e| e.to_string())?.ok_or("no OD(4; 1, 1, 2)")?;
    let h12 = aod_skew_hadamard(1, 4, &small).map_err(|e| e.to_string())?;
    ensure(h12.order() == 12 && skew_ok(&h12), || "order 12 fails the skew check".into())?;
    Ok(format!("756 in {took:.2?}; 12 from a searched OD(4; 1, 1, 2)"))
}

/// Writes `files` into a fresh directory and loads a catalog from it.
fn load_with(files: &[(&str, String)]) -> Result<Catalog, hadamard::Error> {
    let dir = std::env::temp_dir().join(format!("hadamard-acceptance-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    for (name, text) in files {
        std::fs::write(dir.join(name), text).unwrap();
    }
    let res = Catalog::load(Some(&dir));
    let _ = std::fs::remove_dir_all(&dir);
    res
}

fn catalog_reverification() -> Outcome {
    let cat = Catalog::builtin().map_err(|e| e.to_string())?;
    let records = cat.williamson.len() + cat.good.len() + cat.sds.len() + cat.designs.len();
    let cases: [(&str, &str, &str, &str); 6] = [
        ("williamson.json", catalog::WILLIAMSON.1, "\"rows\":[[1,", "\"rows\":[[-1,"),
        ("good.json", catalog::GOOD.1, "\"rows\":[[1,1,-1]", "\"rows\":[[1,1,1]"),
        ("sds.json", catalog::SDS.1, "\"cosets\":[1,2,3,5,6,9]", "\"cosets\":[1,2,3,5,6,7]"),
        ("designs.json", catalog::DESIGNS.1, "[[1,2,3,3]", "[[1,2,3,-3]"),
        ("sequences.json", catalog::SEQUENCES.1, "[[1,-1],[1,1],[1],[1]]", "[[1,-1],[1,-1],[1],[1]]"),
        ("dispatch.txt", catalog::DISPATCH.1, "23 plain Will", "23 plain Wil"),
    ];
    for (name, text, from, to) in cases {
        ensure(text.contains(from), || format!("{name}: corruption anchor {from:?} missing"))?;
        let bad = text.replacen(from, to, 1);
        let err = match load_with(&[(name, bad)]) {
            Ok(_) => return Err(format!("{name}: corrupted file loaded")),
            Err(e) => e.to_string(),
        };
        let named = err.contains('#') || err.contains("line");
        ensure(named, || format!("{name}: error does not name the record: {err}"))?;
    }
    let unchanged = load_with(&[("good.json", catalog::GOOD.1.to_string())]).map_err(|e| e.to_string())?;
    ensure(unchanged.good.len() == cat.good.len(), || "reload changed the catalog".into())?;
    Ok(format!("{records} matrix records re-verified; 6 corrupted files rejected with the record named"))
}
