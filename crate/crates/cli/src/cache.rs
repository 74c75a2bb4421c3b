//! On-disk cache of the closed-form table for one `(degree, gmax)`.
//!
//! Layout: a magic line `hodge-series-cache v1 degree=<d> gmax=<G>`
//! followed by the CSV encoding of every record.

use std::fs;
use std::io;
use std::path::Path as FsPath;

use hurwitz_hodge::IntegralTable;

use crate::records::{parse_csv, to_csv, OutputRecord};

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cannot read cache {path}: {source}")]
    Unreadable { path: String, source: io::Error },
    #[error("cannot write cache {path}: {source}")]
    Unwritable { path: String, source: io::Error },
    #[error("corrupt cache {path}: {reason}")]
    Corrupt { path: String, reason: String },
}

pub fn header_line(degree: u32, gmax: u32) -> String {
    format!("hodge-series-cache v1 degree={degree} gmax={gmax}")
}

fn parse_header(line: &str) -> Option<(u32, u32)> {
    let rest = line.strip_prefix("hodge-series-cache v1 ")?;
    let (d, g) = rest.split_once(' ')?;
    let d = d.strip_prefix("degree=")?.parse().ok()?;
    let g = g.strip_prefix("gmax=")?.parse().ok()?;
    Some((d, g))
}

pub enum Lookup {
    /// The cache matched and holds this table.
    Hit(IntegralTable),
    /// No file, or a well-formed cache for another configuration.
    Miss,
}

/// Loads the cache at `path` if it was written for `(degree, gmax)`.
///
/// The loaded table must hold exactly the keys of `expected`; anything else
/// is reported as corruption.
pub fn load(
    path: &FsPath,
    degree: u32,
    gmax: u32,
    expected: impl Fn(&IntegralTable) -> bool,
) -> Result<Lookup, CacheError> {
    let shown = path.display().to_string();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Lookup::Miss),
        Err(source) => {
            return Err(CacheError::Unreadable {
                path: shown,
                source,
            })
        }
    };
    let corrupt = |reason: String| CacheError::Corrupt {
        path: shown.clone(),
        reason,
    };
    let (first, body) = text.split_once('\n').unwrap_or((text.as_str(), ""));
    let (cd, cg) = parse_header(first).ok_or_else(|| corrupt(format!("bad header {first:?}")))?;
    if (cd, cg) != (degree, gmax) {
        return Ok(Lookup::Miss);
    }
    let records = parse_csv(body, 2).map_err(|e| corrupt(e.to_string()))?;
    let mut table = IntegralTable::new();
    for r in records {
        if r.degree != degree {
            return Err(corrupt(format!(
                "record for degree {} in a degree {degree} cache",
                r.degree
            )));
        }
        let key = r.key().map_err(&corrupt)?;
        if table.contains(&key) {
            return Err(corrupt(format!("duplicate record {key}")));
        }
        table.insert(key, r.value, r.path);
    }
    if !expected(&table) {
        return Err(corrupt(
            "record set does not match the configuration".into(),
        ));
    }
    Ok(Lookup::Hit(table))
}

pub fn store(
    path: &FsPath,
    degree: u32,
    gmax: u32,
    table: &IntegralTable,
) -> Result<(), CacheError> {
    let records: Vec<OutputRecord> = table
        .iter()
        .map(|(k, e)| OutputRecord::from_entry(degree, k, &e.value, e.path))
        .collect();
    let mut text = header_line(degree, gmax);
    text.push('\n');
    text.push_str(&to_csv(&records));
    fs::write(path, text).map_err(|source| CacheError::Unwritable {
        path: path.display().to_string(),
        source,
    })
}
