//! Output records and their CSV, JSON and pretty encodings.

use std::fmt::Write as _;

use hurwitz_hodge::rational::{parse_rational, to_pq};
use hurwitz_hodge::{Family, IntegralKey, IntegralTable, Path, Rational};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "family,degree,i,g,value,path";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub family: Family,
    pub degree: u32,
    /// Absent for `T`.
    pub i: Option<u32>,
    pub g: u32,
    pub value: Rational,
    pub path: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct RecordParseError {
    pub line: usize,
    pub reason: String,
}

impl OutputRecord {
    pub fn key(&self) -> Result<IntegralKey, String> {
        match (self.family, self.i) {
            (Family::D, Some(i)) => Ok(IntegralKey::D { i, g: self.g }),
            (Family::V, Some(i)) => Ok(IntegralKey::V { i, g: self.g }),
            (Family::T, None) => Ok(IntegralKey::T { g: self.g }),
            (Family::T, Some(_)) => Err("T records carry no index".into()),
            (_, None) => Err(format!("{} records need an index", self.family)),
        }
    }

    pub fn from_entry(degree: u32, key: &IntegralKey, value: &Rational, path: Path) -> Self {
        OutputRecord {
            family: key.family(),
            degree,
            i: key.index(),
            g: key.genus(),
            value: value.clone(),
            path,
        }
    }

    pub fn to_csv_row(&self) -> String {
        let i = self.i.map(|i| i.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.family,
            self.degree,
            i,
            self.g,
            to_pq(&self.value),
            self.path
        )
    }

    pub fn from_csv_row(row: &str) -> Result<Self, String> {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 6 {
            return Err(format!("expected 6 columns, found {}", cols.len()));
        }
        let family: Family = cols[0].parse()?;
        let degree: u32 = cols[1]
            .parse()
            .map_err(|_| format!("bad degree {:?}", cols[1]))?;
        let i = if cols[2].is_empty() {
            None
        } else {
            Some(
                cols[2]
                    .parse()
                    .map_err(|_| format!("bad index {:?}", cols[2]))?,
            )
        };
        let g: u32 = cols[3]
            .parse()
            .map_err(|_| format!("bad genus {:?}", cols[3]))?;
        let value = parse_rational(cols[4]).map_err(|e| e.to_string())?;
        let path: Path = cols[5].parse()?;
        let rec = OutputRecord {
            family,
            degree,
            i,
            g,
            value,
            path,
        };
        rec.key()?;
        Ok(rec)
    }
}

/// Records of `table` in key order, restricted to `family`, genus `<= gmax`
/// and, when given, index `i`.
pub fn select(
    table: &IntegralTable,
    degree: u32,
    family: Family,
    gmax: u32,
    i: Option<u32>,
) -> Vec<OutputRecord> {
    table
        .family(family)
        .filter(|(k, _)| k.genus() <= gmax)
        .filter(|(k, _)| i.is_none() || k.index() == i)
        .map(|(k, e)| OutputRecord::from_entry(degree, k, &e.value, e.path))
        .collect()
}

pub fn to_csv(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.to_csv_row());
        out.push('\n');
    }
    out
}

/// Parses CSV produced by [`to_csv`]; `first_line` is the 1-based line
/// number of the header within a larger file, for error messages.
pub fn parse_csv(text: &str, first_line: usize) -> Result<Vec<OutputRecord>, RecordParseError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(RecordParseError {
                line: first_line,
                reason: format!("expected header {CSV_HEADER:?}, found {other:?}"),
            })
        }
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(n, l)| {
            OutputRecord::from_csv_row(l).map_err(|reason| RecordParseError {
                line: first_line + n + 1,
                reason,
            })
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonConfig {
    degree: u32,
    gmax: u32,
    family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    i: Option<u32>,
    verify: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRecord {
    family: String,
    degree: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    i: Option<u32>,
    g: u32,
    value: String,
    path: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDocument {
    config: JsonConfig,
    records: Vec<JsonRecord>,
}

pub struct TableHeader {
    pub degree: u32,
    pub gmax: u32,
    pub family: Family,
    pub i: Option<u32>,
    pub verify: bool,
}

pub fn to_json(header: &TableHeader, records: &[OutputRecord]) -> String {
    let doc = JsonDocument {
        config: JsonConfig {
            degree: header.degree,
            gmax: header.gmax,
            family: header.family.to_string(),
            i: header.i,
            verify: header.verify,
        },
        records: records
            .iter()
            .map(|r| JsonRecord {
                family: r.family.to_string(),
                degree: r.degree,
                i: r.i,
                g: r.g,
                value: to_pq(&r.value),
                path: r.path.to_string(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Vec<OutputRecord>, String> {
    let doc: JsonDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
    doc.records
        .into_iter()
        .map(|r| {
            let rec = OutputRecord {
                family: r.family.parse()?,
                degree: r.degree,
                i: r.i,
                g: r.g,
                value: parse_rational(&r.value).map_err(|e| e.to_string())?,
                path: r.path.parse()?,
            };
            rec.key()?;
            Ok(rec)
        })
        .collect()
}

pub fn to_pretty(header: &TableHeader, records: &[OutputRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# family={} degree={} gmax={}",
        header.family, header.degree, header.gmax
    );
    let labels: Vec<String> = records
        .iter()
        .map(|r| r.key().map(|k| k.to_string()).unwrap_or_default())
        .collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0);
    for (label, r) in labels.iter().zip(records) {
        let _ = writeln!(out, "{label:<width$} = {}  [{}]", to_pq(&r.value), r.path);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hurwitz_hodge::rational::rat;

    fn sample() -> Vec<OutputRecord> {
        vec![
            OutputRecord {
                family: Family::D,
                degree: 2,
                i: Some(2),
                g: 3,
                value: rat(15, 16),
                path: Path::ClosedForm,
            },
            OutputRecord {
                family: Family::T,
                degree: 2,
                i: None,
                g: 0,
                value: rat(1, 2),
                path: Path::BothAgree,
            },
        ]
    }

    #[test]
    fn csv_rows() {
        let rows = to_csv(&sample());
        assert_eq!(
            rows,
            "family,degree,i,g,value,path\nD,2,2,3,15/16,closed-form\nT,2,,0,1/2,both-agree\n"
        );
        assert_eq!(parse_csv(&rows, 1).unwrap(), sample());
    }

    #[test]
    fn csv_rejects_damage() {
        assert!(parse_csv("family,degree\n", 1).is_err());
        let err = parse_csv(
            "family,degree,i,g,value,path\nD,2,2,3,15/0,closed-form\n",
            5,
        )
        .unwrap_err();
        assert_eq!(err.line, 6);
        assert!(parse_csv("family,degree,i,g,value,path\nT,2,1,0,1/2,closed-form\n", 1).is_err());
        assert!(parse_csv("family,degree,i,g,value,path\nD,2,,0,1/2,closed-form\n", 1).is_err());
    }

    #[test]
    fn json_round_trip_and_shape() {
        let header = TableHeader {
            degree: 2,
            gmax: 3,
            family: Family::D,
            i: None,
            verify: false,
        };
        let text = to_json(&header, &sample());
        assert!(text.contains("\"value\": \"15/16\""));
        assert!(!text.contains("\"i\": null"));
        assert_eq!(parse_json(&text).unwrap(), sample());
    }
}
