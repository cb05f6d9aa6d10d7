//! Cross-checks of coefficient tables against local OEIS b-file snapshots.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use thiserror::Error;

use super::tables::table_by_number;

/// Overrides the b-file directory.
pub const OEIS_DIR_VAR: &str = "TANGLE_OEIS_DIR";

/// Tables cited with an OEIS triangle.
pub const OEIS_LINKS: [(u32, &str); 4] = [(1, "A007318"), (4, "A034870"), (7, "A038208"), (79, "A129185")];

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path} line {line}: {msg}")]
    Format { path: PathBuf, line: usize, msg: String },
    #[error("no table {0}")]
    UnknownTable(u32),
}

pub fn oeis_dir() -> PathBuf {
    std::env::var_os(OEIS_DIR_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("oeis"))
}

/// `A007318` -> `b007318.txt`.
pub fn bfile_path(dir: &Path, anum: &str) -> PathBuf {
    dir.join(format!("b{}.txt", anum.trim_start_matches('A')))
}

/// `(index, value)` pairs; `#` lines and blank lines are skipped.
pub fn read_bfile(path: &Path) -> Result<Vec<(i64, BigInt)>, OeisError> {
    let text = fs::read_to_string(path).map_err(|source| OeisError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |msg: &str| OeisError::Format {
            path: path.to_path_buf(),
            line: i + 1,
            msg: msg.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(fail("expected 'n a(n)'"));
        };
        let n: i64 = n.parse().map_err(|_| fail("bad index"))?;
        let v: BigInt = v.parse().map_err(|_| fail("bad value"))?;
        if out.last().is_some_and(|(prev, _): &(i64, BigInt)| *prev + 1 != n) {
            return Err(fail("indices must be consecutive"));
        }
        out.push((n, v));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisCheck {
    pub table_no: u32,
    pub anum: &'static str,
    pub compared: usize,
    /// `(b-file index, expected, table value)`.
    pub mismatches: Vec<(i64, Option<BigInt>, BigInt)>,
}

impl OeisCheck {
    pub fn passed(&self) -> bool {
        self.compared > 0 && self.mismatches.is_empty()
    }
}

/// Rows `n = 0..=n_max` of the table with the `x^0` column dropped, read as
/// one sequence from the first index of the b-file.
pub fn check_table(table_no: u32, anum: &'static str, dir: &Path, n_max: u32) -> Result<OeisCheck, OeisError> {
    let rows = table_by_number(table_no, n_max, None).ok_or(OeisError::UnknownTable(table_no))?;
    let seq = read_bfile(&bfile_path(dir, anum))?;
    let start = seq.first().map_or(0, |(n, _)| *n);
    let flat: Vec<BigInt> = rows.into_iter().flat_map(|r| r.into_iter().skip(1)).collect();
    let mismatches = flat
        .iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let expected = seq.get(i).map(|(_, e)| e.clone());
            (expected.as_ref() != Some(v)).then(|| (start + i as i64, expected, v.clone()))
        })
        .collect();
    Ok(OeisCheck {
        table_no,
        anum,
        compared: flat.len(),
        mismatches,
    })
}

/// All four cited cross-checks over the printed rows `n = 0..=5`.
pub fn check_all(dir: &Path) -> Vec<(u32, &'static str, Result<OeisCheck, OeisError>)> {
    OEIS_LINKS
        .iter()
        .map(|&(t, a)| (t, a, check_table(t, a, dir, 5)))
        .collect()
}
