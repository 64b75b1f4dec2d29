//! Shipped reference data, loaded once and re-verified on load.
//!
//! Every file is compiled into the library. Setting `HADAMARD_DATA_DIR`
//! makes the loader read same-named files from that directory instead;
//! files absent there fall back to the compiled copy.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::constructions::{GoodQuad, OrthDesign, WilliamsonQuad};
use crate::diffsets::{AbelianGroup, SdsRecord, SubsetFamily};
use crate::error::{Error, Result};
use crate::registry::DispatchTable;
use crate::seqfam::SequenceCatalog;

pub const DATA_DIR_ENV: &str = "HADAMARD_DATA_DIR";

type DataFile = (&'static str, &'static str);

pub const SEQUENCES: DataFile = ("sequences.json", include_str!("../data/sequences.json"));
pub const WILLIAMSON: DataFile = ("williamson.json", include_str!("../data/williamson.json"));
pub const GOOD: DataFile = ("good.json", include_str!("../data/good.json"));
pub const SDS: DataFile = ("sds.json", include_str!("../data/sds.json"));
pub const DESIGNS: DataFile = ("designs.json", include_str!("../data/designs.json"));
pub const DISPATCH: DataFile = ("dispatch.txt", include_str!("../data/dispatch.txt"));

/// One SDS record: coset data for `Z_n`, or explicit sets over any
/// abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SdsEntry {
    Orbit(SdsRecord),
    Explicit {
        group: AbelianGroup,
        sets: Vec<Vec<u32>>,
        lambda: u64,
        skew: bool,
        #[serde(default)]
        source: String,
    },
}

impl SdsEntry {
    pub fn order(&self) -> u32 {
        match self {
            SdsEntry::Orbit(r) => r.n,
            SdsEntry::Explicit { group, .. } => group.order(),
        }
    }

    pub fn skew(&self) -> bool {
        match self {
            SdsEntry::Orbit(r) => r.skew,
            SdsEntry::Explicit { skew, .. } => *skew,
        }
    }

    /// The verified family, skew in `S_1` when flagged.
    pub fn family(&self) -> Result<SubsetFamily> {
        let fam = match self {
            SdsEntry::Orbit(r) => r.build()?,
            SdsEntry::Explicit { group, sets, lambda, .. } => {
                SubsetFamily::new(group.clone(), sets.clone(), *lambda)?
            }
        };
        if self.skew() && !fam.is_skew() {
            return Err(Error::check("SDS record", "flagged skew but S_1 is not a skew set"));
        }
        if fam.sets.len() != 4 {
            return Err(Error::check("SDS record", "expected four sets"));
        }
        Ok(fam)
    }
}

/// All reference data used by the constructions.
#[derive(Debug)]
pub struct Catalog {
    pub sequences: SequenceCatalog,
    pub williamson: BTreeMap<usize, WilliamsonQuad>,
    pub good: BTreeMap<usize, GoodQuad>,
    /// Keyed by `(order, skew)`.
    pub sds: BTreeMap<(u32, bool), (SdsEntry, SubsetFamily)>,
    pub designs: Vec<OrthDesign>,
    pub dispatch: DispatchTable,
}

impl Catalog {
    /// Loads the compiled-in data.
    pub fn builtin() -> Result<Self> {
        Self::load(None)
    }

    /// Loads from `dir`, falling back per file to the compiled-in data.
    pub fn load(dir: Option<&Path>) -> Result<Self> {
        let read = |(name, builtin): DataFile| -> Result<String> {
            if let Some(d) = dir {
                let path = d.join(name);
                if path.exists() {
                    return std::fs::read_to_string(&path).map_err(|e| Error::Catalog {
                        record: path.display().to_string(),
                        msg: e.to_string(),
                    });
                }
            }
            Ok(builtin.to_string())
        };
        Ok(Catalog {
            sequences: SequenceCatalog::from_json(&read(SEQUENCES)?).map_err(in_file(SEQUENCES.0))?,
            williamson: parse_quads(WILLIAMSON.0, &read(WILLIAMSON)?, WilliamsonQuad::n)?,
            good: parse_quads(GOOD.0, &read(GOOD)?, GoodQuad::n)?,
            sds: parse_sds(&read(SDS)?)?,
            designs: parse_records(DESIGNS.0, &read(DESIGNS)?)?,
            dispatch: DispatchTable::parse(&read(DISPATCH)?).map_err(in_file(DISPATCH.0))?,
        })
    }

    /// Parses and re-verifies one data file by its file name, returning the
    /// number of records it holds.
    pub fn check_file(name: &str, text: &str) -> Result<usize> {
        match name {
            n if n == SEQUENCES.0 => {
                let cat = SequenceCatalog::from_json(text).map_err(in_file(SEQUENCES.0))?;
                Ok(cat.turyn_lengths().count() + cat.turyn_type_lengths().count() + cat.base_shapes().len())
            }
            n if n == WILLIAMSON.0 => Ok(parse_quads(WILLIAMSON.0, text, WilliamsonQuad::n)?.len()),
            n if n == GOOD.0 => Ok(parse_quads(GOOD.0, text, GoodQuad::n)?.len()),
            n if n == SDS.0 => Ok(parse_sds(text)?.len()),
            n if n == DESIGNS.0 => Ok(parse_records::<OrthDesign>(DESIGNS.0, text)?.len()),
            n if n == DISPATCH.0 => {
                let t = DispatchTable::parse(text).map_err(in_file(DISPATCH.0))?;
                Ok(t.entries(false).count() + t.entries(true).count())
            }
            other => Err(Error::invalid(format!("unknown catalog file {other:?}"))),
        }
    }

    pub fn sds_family(&self, n: u32, skew: bool) -> Option<&SubsetFamily> {
        self.sds.get(&(n, skew)).map(|(_, f)| f)
    }

    pub fn design(&self, order: usize, types: &[usize]) -> Option<&OrthDesign> {
        self.designs.iter().find(|d| d.order() == order && d.types() == types)
    }
}

fn in_file(name: &'static str) -> impl Fn(Error) -> Error {
    move |e: Error| match e {
        Error::Catalog { record, msg } => Error::Catalog {
            record: format!("{name} {record}"),
            msg,
        },
        other => Error::Catalog {
            record: name.to_string(),
            msg: other.to_string(),
        },
    }
}

/// A JSON array of records; each element is deserialized (which runs the
/// type's own verification) and a failure names the element.
fn parse_records<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<Vec<T>> {
    let raw: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| Error::Catalog {
        record: name.to_string(),
        msg: e.to_string(),
    })?;
    raw.into_iter()
        .enumerate()
        .map(|(i, v)| {
            let hint = v.get("n").or_else(|| v.get("order")).map(|x| format!(" (n={x})")).unwrap_or_default();
            serde_json::from_value::<T>(v).map_err(|e| Error::Catalog {
                record: format!("{name} #{i}{hint}"),
                msg: e.to_string(),
            })
        })
        .collect()
}

fn parse_quads<T: for<'de> Deserialize<'de>>(
    name: &str,
    text: &str,
    n: impl Fn(&T) -> usize,
) -> Result<BTreeMap<usize, T>> {
    let mut out = BTreeMap::new();
    for (i, q) in parse_records::<T>(name, text)?.into_iter().enumerate() {
        let key = n(&q);
        if out.insert(key, q).is_some() {
            return Err(Error::Catalog {
                record: format!("{name} #{i} (n={key})"),
                msg: "duplicate order".into(),
            });
        }
    }
    Ok(out)
}

fn parse_sds(text: &str) -> Result<BTreeMap<(u32, bool), (SdsEntry, SubsetFamily)>> {
    let name = SDS.0;
    let mut out = BTreeMap::new();
    for (i, entry) in parse_records::<SdsEntry>(name, text)?.into_iter().enumerate() {
        let record = || format!("{name} #{i} (n={})", entry.order());
        let fam = entry.family().map_err(|e| Error::Catalog {
            record: record(),
            msg: e.to_string(),
        })?;
        let key = (entry.order(), entry.skew());
        if out.contains_key(&key) {
            return Err(Error::Catalog {
                record: record(),
                msg: "duplicate order".into(),
            });
        }
        out.insert(key, (entry, fam));
    }
    Ok(out)
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

static GLOBAL: OnceLock<Result<Catalog>> = OnceLock::new();

/// The process-wide catalog, honouring `HADAMARD_DATA_DIR` on first use.
pub fn global() -> Result<&'static Catalog> {
    GLOBAL
        .get_or_init(|| Catalog::load(data_dir().as_deref()))
        .as_ref()
        .map_err(Clone::clone)
}
