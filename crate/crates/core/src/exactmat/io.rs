//! Text encodings of matrices: the `pm1` grid, a JSON document and CSV.

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use crate::error::{Error, Result};

fn symbol(v: i8) -> char {
    match v {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

/// One line per row, one of `+ - 0` per entry, every line newline-terminated.
pub fn to_pm1(m: &Matrix) -> String {
    let mut out = String::with_capacity(m.rows() * (m.cols() + 1));
    for i in 0..m.rows() {
        out.extend(m.row(i).iter().map(|&v| symbol(v)));
        out.push('\n');
    }
    out
}

/// Parses a square `pm1` grid.
///
/// Carriage returns, blank lines, ragged rows and a missing final newline are
/// all rejected so that the format stays bit-exact under round trips.
pub fn parse_pm1(text: &str) -> Result<Matrix> {
    if text.is_empty() {
        return Err(Error::parse(1, "empty input"));
    }
    let Some(body) = text.strip_suffix('\n') else {
        return Err(Error::parse(text.lines().count(), "missing final newline"));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    let n = lines.len();
    let mut data = Vec::with_capacity(n * n);
    for (idx, line) in lines.iter().enumerate() {
        let lineno = idx + 1;
        let mut width = 0usize;
        for c in line.chars() {
            data.push(match c {
                '+' => 1,
                '-' => -1,
                '0' => 0,
                '\r' => return Err(Error::parse(lineno, "carriage return not allowed")),
                other => return Err(Error::parse(lineno, format!("unexpected character {other:?}"))),
            });
            width += 1;
        }
        if width != n {
            return Err(Error::parse(
                lineno,
                format!("row has {width} entries, expected {n}"),
            ));
        }
    }
    Matrix::new(n, n, data)
}

/// JSON form of a constructed matrix and the recipe that built it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub order: usize,
    pub skew: bool,
    pub method: Option<String>,
    pub rows: Vec<Vec<i8>>,
}

impl MatrixDocument {
    pub fn new(m: &Matrix, skew: bool, method: Option<String>) -> Self {
        MatrixDocument {
            order: m.rows(),
            skew,
            method,
            rows: m.to_rows(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e))
    }

    /// Validates shape against `order` and rebuilds the matrix.
    pub fn matrix(&self) -> Result<Matrix> {
        if self.rows.len() != self.order || self.rows.iter().any(|r| r.len() != self.order) {
            return Err(Error::Dimension(format!(
                "document declares order {} but rows do not form a square of that size",
                self.order
            )));
        }
        Matrix::from_rows(&self.rows)
    }
}

pub fn to_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Parses comma-separated integer rows; the result must be square.
pub fn parse_csv(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vec<i8>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|f| {
                f.trim()
                    .parse::<i8>()
                    .map_err(|e| Error::parse(idx + 1, format!("{f:?}: {e}")))
            })
            .collect::<Result<Vec<i8>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(1, "empty input"));
    }
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(Error::Dimension("csv rows do not form a square".into()));
    }
    Matrix::from_rows(&rows)
}

/// Parses whichever of pm1, JSON or CSV the text looks like.
pub fn parse_any(text: &str) -> Result<Matrix> {
    match text.trim_start().chars().next() {
        Some('{') => MatrixDocument::from_json(text)?.matrix(),
        Some('+' | '-' | '0') if text.chars().all(|c| matches!(c, '+' | '-' | '0' | '\n' | '\r')) => parse_pm1(text),
        Some(_) => parse_csv(text),
        None => Err(Error::parse(1, "empty input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pm1_round_trip() {
        let m = Matrix::from_rows(&[[1i8, 1, 0], [-1, 1, 0], [0, 0, 1]]).unwrap();
        let text = to_pm1(&m);
        assert_eq!(text, "++0\n-+0\n00+\n");
        assert_eq!(parse_pm1(&text).unwrap(), m);
    }

    #[test]
    fn pm1_rejects_malformed_text() {
        assert!(parse_pm1("").is_err());
        assert!(parse_pm1("+").is_err());
        assert!(parse_pm1("++\r\n+-\r\n").is_err());
        assert!(parse_pm1("++\n+\n").is_err());
        assert!(parse_pm1("+x\n++\n").is_err());
        assert!(parse_pm1("++\n++\n\n").is_err());
    }

    #[test]
    fn json_and_csv_round_trip() {
        let m = Matrix::from_rows(&[[1i8, 1], [1, -1]]).unwrap();
        let doc = MatrixDocument::new(&m, false, Some("PaleyI".into()));
        let back = MatrixDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.matrix().unwrap(), m);
        assert_eq!(parse_csv(&to_csv(&m)).unwrap(), m);
        assert_eq!(parse_any(&to_csv(&m)).unwrap(), m);
        assert_eq!(parse_any(&doc.to_json()).unwrap(), m);
        assert_eq!(parse_any(&to_pm1(&m)).unwrap(), m);
    }

    #[test]
    fn json_shape_is_validated() {
        let doc = MatrixDocument {
            order: 3,
            skew: false,
            method: None,
            rows: vec![vec![1, 1], vec![1, -1]],
        };
        assert!(doc.matrix().is_err());
    }
}
