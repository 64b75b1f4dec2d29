use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A construction identifier, with the parameters the tables print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Method {
    PaleyI,
    PaleyII,
    Will,
    GS,
    SDS,
    CW(u32),
    Good,
    Miy,
    CDS,
    Spence(u64),
    AOD(u32, u32),
    Double,
}

/// A method name without its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodKind {
    PaleyI,
    PaleyII,
    Will,
    GS,
    SDS,
    CW,
    Good,
    Miy,
    CDS,
    Spence,
    AOD,
    Double,
}

impl MethodKind {
    pub const ALL: [MethodKind; 12] = [
        MethodKind::PaleyI,
        MethodKind::PaleyII,
        MethodKind::Will,
        MethodKind::GS,
        MethodKind::SDS,
        MethodKind::CW,
        MethodKind::Good,
        MethodKind::Miy,
        MethodKind::CDS,
        MethodKind::Spence,
        MethodKind::AOD,
        MethodKind::Double,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::PaleyI => "PaleyI",
            MethodKind::PaleyII => "PaleyII",
            MethodKind::Will => "Will",
            MethodKind::GS => "GS",
            MethodKind::SDS => "SDS",
            MethodKind::CW => "CW",
            MethodKind::Good => "Good",
            MethodKind::Miy => "Miy",
            MethodKind::CDS => "CDS",
            MethodKind::Spence => "Spence",
            MethodKind::AOD => "AOD",
            MethodKind::Double => "Double",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        MethodKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::invalid(format!("unknown method {t:?}")))
    }
}

impl Method {
    pub fn kind(self) -> MethodKind {
        match self {
            Method::PaleyI => MethodKind::PaleyI,
            Method::PaleyII => MethodKind::PaleyII,
            Method::Will => MethodKind::Will,
            Method::GS => MethodKind::GS,
            Method::SDS => MethodKind::SDS,
            Method::CW(_) => MethodKind::CW,
            Method::Good => MethodKind::Good,
            Method::Miy => MethodKind::Miy,
            Method::CDS => MethodKind::CDS,
            Method::Spence(_) => MethodKind::Spence,
            Method::AOD(..) => MethodKind::AOD,
            Method::Double => MethodKind::Double,
        }
    }

    /// Whether the method yields skew matrices.
    pub fn is_skew(self) -> bool {
        matches!(
            self,
            Method::PaleyI | Method::GS | Method::Good | Method::CDS | Method::Spence(_) | Method::AOD(..)
        )
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::CW(t) => write!(f, "CW({t})"),
            Method::Spence(q) => write!(f, "Spence({q})"),
            Method::AOD(m, n) => write!(f, "AOD({m}, {n})"),
            other => f.write_str(other.kind().name()),
        }
    }
}

fn parse_args(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|a| a.trim().parse::<u64>().map_err(|e| Error::invalid(format!("bad method parameter {a:?}: {e}"))))
        .collect()
}

impl FromStr for Method {
    type Err = Error;

    /// Accepts the printed forms, e.g. `PaleyI`, `CW(47)`, `AOD(1, 28)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, args) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::invalid(format!("unbalanced parentheses in {s:?}")))?;
                (&s[..i], Some(parse_args(inner)?))
            }
            None => (s, None),
        };
        let kind: MethodKind = head.parse()?;
        let want = match kind {
            MethodKind::CW | MethodKind::Spence => 1,
            MethodKind::AOD => 2,
            _ => 0,
        };
        let args = args.unwrap_or_default();
        if args.len() != want {
            return Err(Error::invalid(format!("{kind} takes {want} parameter(s), got {s:?}")));
        }
        let small = |x: u64| u32::try_from(x).map_err(|_| Error::invalid(format!("parameter {x} too large")));
        Ok(match kind {
            MethodKind::PaleyI => Method::PaleyI,
            MethodKind::PaleyII => Method::PaleyII,
            MethodKind::Will => Method::Will,
            MethodKind::GS => Method::GS,
            MethodKind::SDS => Method::SDS,
            MethodKind::CW => Method::CW(small(args[0])?),
            MethodKind::Good => Method::Good,
            MethodKind::Miy => Method::Miy,
            MethodKind::CDS => Method::CDS,
            MethodKind::Spence => Method::Spence(args[0]),
            MethodKind::AOD => Method::AOD(small(args[0])?, small(args[1])?),
            MethodKind::Double => Method::Double,
        })
    }
}

impl From<Method> for String {
    fn from(m: Method) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for Method {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A method name, optionally pinned to exact parameters, as accepted by
/// `--method`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MethodFilter {
    pub kind: MethodKind,
    pub exact: Option<Method>,
}

impl MethodFilter {
    pub fn accepts(&self, m: Method) -> bool {
        m.kind() == self.kind && self.exact.is_none_or(|e| e == m)
    }
}

impl FromStr for MethodFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('(') {
            let m: Method = s.parse()?;
            return Ok(MethodFilter { kind: m.kind(), exact: Some(m) });
        }
        Ok(MethodFilter { kind: s.parse()?, exact: None })
    }
}

impl fmt::Display for MethodFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(m) => m.fmt(f),
            None => self.kind.fmt(f),
        }
    }
}

/// The odd-`n` dispatch map for both tables. `None` marks a blank cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DispatchTable {
    plain: BTreeMap<u32, Option<Method>>,
    skew: BTreeMap<u32, Option<Method>>,
}

impl DispatchTable {
    /// Parses lines `n plain|skew METHOD`, with `-` for a blank cell.
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = DispatchTable::default();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.splitn(3, char::is_whitespace);
            let (Some(n), Some(kind), Some(method)) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::parse(line_no, "expected `n plain|skew METHOD`"));
            };
            let n: u32 = n.parse().map_err(|e| Error::parse(line_no, format!("bad order {n:?}: {e}")))?;
            if n.is_multiple_of(2) {
                return Err(Error::parse(line_no, format!("n = {n} is even")));
            }
            let map = match kind {
                "plain" => &mut table.plain,
                "skew" => &mut table.skew,
                other => return Err(Error::parse(line_no, format!("unknown table {other:?}"))),
            };
            let method = match method.trim() {
                "-" => None,
                m => Some(m.parse::<Method>().map_err(|e| Error::parse(line_no, e))?),
            };
            if method == Some(Method::Double) {
                return Err(Error::parse(line_no, "Double is not a table entry"));
            }
            if map.insert(n, method).is_some() {
                return Err(Error::parse(line_no, format!("duplicate entry for n = {n}")));
            }
        }
        Ok(table)
    }

    /// `Some(cell)` when the table covers `n`; the cell is `None` when blank.
    pub fn lookup(&self, n: u32, skew: bool) -> Option<Option<Method>> {
        let map = if skew { &self.skew } else { &self.plain };
        map.get(&n).copied()
    }

    /// Largest odd `n` covered by the given table.
    pub fn max_n(&self, skew: bool) -> u32 {
        let map = if skew { &self.skew } else { &self.plain };
        map.keys().next_back().copied().unwrap_or(0)
    }

    pub fn entries(&self, skew: bool) -> impl Iterator<Item = (u32, Option<Method>)> + '_ {
        let map = if skew { &self.skew } else { &self.plain };
        map.iter().map(|(&n, &m)| (n, m))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, skew) in [("plain", false), ("skew", true)] {
            for (n, m) in self.entries(skew) {
                let cell = m.map_or_else(|| "-".to_string(), |m| m.to_string());
                out.push_str(&format!("{n} {name} {cell}\n"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_round_trip() {
        for s in ["PaleyI", "CW(47)", "AOD(1, 28)", "Spence(13)", "Double"] {
            assert_eq!(s.parse::<Method>().unwrap().to_string(), s);
        }
        assert_eq!("AOD(1,28)".parse::<Method>().unwrap(), Method::AOD(1, 28));
        assert!("CW".parse::<Method>().is_err());
        assert!("CW(1,2)".parse::<Method>().is_err());
        assert!("Foo".parse::<Method>().is_err());
        let f: MethodFilter = "cw".parse().unwrap();
        assert!(f.accepts(Method::CW(3)));
        let f: MethodFilter = "CW(5)".parse().unwrap();
        assert!(!f.accepts(Method::CW(3)));
    }

    #[test]
    fn parse_table() {
        let t = DispatchTable::parse("# c\n1 plain PaleyI\n167 plain -\n189 skew AOD(1, 28)\n").unwrap();
        assert_eq!(t.lookup(1, false), Some(Some(Method::PaleyI)));
        assert_eq!(t.lookup(167, false), Some(None));
        assert_eq!(t.lookup(189, true), Some(Some(Method::AOD(1, 28))));
        assert_eq!(t.lookup(3, false), None);
        assert_eq!(DispatchTable::parse(&t.to_text()).unwrap(), t);
        for bad in ["2 plain PaleyI", "1 plain", "1 odd PaleyI", "1 plain PaleyI\n1 plain Will", "x plain -"] {
            assert!(matches!(DispatchTable::parse(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }
}
