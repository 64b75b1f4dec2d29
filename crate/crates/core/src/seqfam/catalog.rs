use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::family::{
    base_from_turyn_type, t_sequences_from_base, t_sequences_from_turyn, SeqFamily, SeqKind,
};
use super::missing;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct SeqRecord {
    kind: SeqKind,
    params: BTreeMap<String, usize>,
    members: Vec<Vec<i8>>,
}

fn declared_params(fam: &SeqFamily) -> BTreeMap<String, usize> {
    let len = fam.lengths();
    let pairs: Vec<(&str, usize)> = match fam.kind {
        SeqKind::Turyn => vec![("l", len[0])],
        SeqKind::TurynType => vec![("n", len[0])],
        SeqKind::Base => vec![("n", len[2]), ("p", len[0] - len[2])],
        SeqKind::TSequence => vec![("t", len[0])],
    };
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn label(kind: SeqKind, params: &BTreeMap<String, usize>) -> String {
    let p: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{kind} {}", p.join(" "))
}

/// Verified sequence families keyed by their defining lengths.
#[derive(Clone, Debug, Default)]
pub struct SequenceCatalog {
    turyn: BTreeMap<usize, SeqFamily>,
    turyn_type: BTreeMap<usize, SeqFamily>,
    base: BTreeMap<(usize, usize), SeqFamily>,
    t_seq: BTreeMap<usize, SeqFamily>,
}

impl SequenceCatalog {
    /// Parses a JSON array of records and re-verifies every family.
    ///
    /// The first record that fails its shape, alphabet, declared parameters
    /// or autocorrelation identity aborts the load and is named in the error.
    pub fn from_json(text: &str) -> Result<Self> {
        let records: Vec<SeqRecord> =
            serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e))?;
        let mut cat = SequenceCatalog::default();
        for (idx, rec) in records.into_iter().enumerate() {
            let name = format!("#{idx} ({})", label(rec.kind, &rec.params));
            let reject = |msg: String| Error::Catalog {
                record: name.clone(),
                msg,
            };
            let fam = SeqFamily {
                kind: rec.kind,
                members: rec.members,
            };
            fam.verify().map_err(|e| reject(e.to_string()))?;
            if declared_params(&fam) != rec.params {
                return Err(reject(format!(
                    "declared parameters disagree with lengths {:?}",
                    fam.lengths()
                )));
            }
            cat.insert(fam).map_err(reject)?;
        }
        Ok(cat)
    }

    fn insert(&mut self, fam: SeqFamily) -> std::result::Result<(), String> {
        let len = fam.lengths();
        let slot = match fam.kind {
            SeqKind::Turyn => self.turyn.insert(len[0], fam),
            SeqKind::TurynType => self.turyn_type.insert(len[0], fam),
            SeqKind::Base => self.base.insert((len[2], len[0] - len[2]), fam),
            SeqKind::TSequence => self.t_seq.insert(len[0], fam),
        };
        match slot {
            Some(_) => Err("duplicate record".into()),
            None => Ok(()),
        }
    }

    /// Canonical text: one compact record per line.
    pub fn to_json(&self) -> String {
        let fams = self
            .turyn
            .values()
            .chain(self.turyn_type.values())
            .chain(self.base.values())
            .chain(self.t_seq.values());
        let lines: Vec<String> = fams
            .map(|f| {
                let rec = SeqRecord {
                    kind: f.kind,
                    params: declared_params(f),
                    members: f.members.clone(),
                };
                format!("  {}", serde_json::to_string(&rec).expect("records serialize"))
            })
            .collect();
        format!("[\n{}\n]\n", lines.join(",\n"))
    }

    pub fn add(&mut self, fam: SeqFamily) -> Result<()> {
        fam.verify()?;
        self.insert(fam).map_err(Error::invalid)
    }

    pub fn turyn(&self, l: usize) -> Result<SeqFamily> {
        self.turyn
            .get(&l)
            .cloned()
            .ok_or_else(|| missing(format!("Turyn sequences of length {l}")))
    }

    pub fn turyn_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.turyn.keys().copied()
    }

    pub fn turyn_type(&self, n: usize) -> Result<SeqFamily> {
        self.turyn_type
            .get(&n)
            .cloned()
            .ok_or_else(|| missing(format!("Turyn-type sequences of length {n}")))
    }

    pub fn turyn_type_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.turyn_type.keys().copied()
    }

    /// Base sequences of lengths `(n+p, n+p, n, n)` from explicit records,
    /// Turyn families (`p = 1`) or Turyn-type families (`p = n - 1`).
    pub fn base(&self, n: usize, p: usize) -> Result<SeqFamily> {
        if let Some(f) = self.base.get(&(n, p)) {
            return Ok(f.clone());
        }
        if p == 1 {
            if let Some(t) = self.turyn.get(&(n + 1)) {
                return SeqFamily::new(SeqKind::Base, t.members.clone());
            }
        }
        if p + 1 == n {
            if let Some(tt) = self.turyn_type.get(&n) {
                return base_from_turyn_type(tt);
            }
        }
        Err(missing(format!("base sequences of lengths {}, {n}", n + p)))
    }

    /// Every `(n, p)` for which [`base`](Self::base) succeeds.
    pub fn base_shapes(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.base.keys().copied().collect();
        out.extend(self.turyn.keys().map(|&l| (l - 1, 1)));
        out.extend(self.turyn_type.keys().map(|&n| (n, n - 1)));
        out.sort_unstable();
        out.dedup();
        out
    }

    /// T-sequences of length `t`: explicit records, then the `4l - 1`
    /// Turyn route, then the `2n + p` route over every base source.
    pub fn t_sequences(&self, t: usize) -> Result<SeqFamily> {
        if t == 1 {
            return SeqFamily::new(SeqKind::TSequence, vec![vec![1], vec![0], vec![0], vec![0]]);
        }
        if let Some(f) = self.t_seq.get(&t) {
            return Ok(f.clone());
        }
        if (t + 1).is_multiple_of(4) {
            if let Some(turyn) = self.turyn.get(&((t + 1) / 4)) {
                return t_sequences_from_turyn(turyn);
            }
        }
        for (n, p) in self.base_shapes() {
            if 2 * n + p == t {
                return t_sequences_from_base(&self.base(n, p)?);
            }
        }
        Err(missing(format!("T-sequences of length {t}")))
    }

    /// All `t <= max` for which [`t_sequences`](Self::t_sequences) succeeds.
    pub fn reachable_t(&self, max: usize) -> Vec<usize> {
        (1..=max).filter(|&t| self.t_sequences(t).is_ok()).collect()
    }
}
