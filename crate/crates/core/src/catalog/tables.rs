//! Coefficient tables of `D(A_n)`, `N(A_n)`, `R(A_n)` and the printed
//! reference tables they are checked against.

use std::sync::OnceLock;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{entry, CatalogEntry, EntryId};
use crate::closures::{repeat_closure, ClosureKind};

const REFERENCE: &str = include_str!("../../data/reference_tables.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedRow {
    /// Printed coefficients of `x^0, x^1, ...`.
    pub cells: Vec<BigInt>,
    /// The row ends in an ellipsis; only `cells` is a prefix of the full row.
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub table_no: u32,
    pub kind: ClosureKind,
    /// Entries whose closure produces this table.
    pub entries: Vec<EntryId>,
    /// Rows for `n = 0, 1, ...`.
    pub rows: Vec<PrintedRow>,
}

impl TableSpec {
    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(|r| r.cells.len()).sum()
    }
}

fn parse_reference(text: &str) -> Result<Vec<TableSpec>, String> {
    let mut specs: Vec<TableSpec> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        let fail = |msg: &str| format!("reference tables line {}: {msg}", i + 1);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("table ") {
            let mut fields = rest.split_whitespace();
            let table_no = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| fail("bad table number"))?;
            let kind = fields
                .next()
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| fail("bad closure kind"))?;
            let entries = fields
                .map(|e| e.parse::<EntryId>().map_err(|m| fail(&m)))
                .collect::<Result<_, _>>()?;
            specs.push(TableSpec {
                table_no,
                kind,
                entries,
                rows: Vec::new(),
            });
            continue;
        }
        let (n, cells) = line.split_once(':').ok_or_else(|| fail("expected 'n: cells'"))?;
        let spec = specs.last_mut().ok_or_else(|| fail("row before any table header"))?;
        if n.trim().parse::<usize>().ok() != Some(spec.rows.len()) {
            return Err(fail("rows must be numbered 0, 1, ... in order"));
        }
        let mut row = PrintedRow {
            cells: Vec::new(),
            truncated: false,
        };
        for c in cells.split_whitespace() {
            if row.truncated {
                return Err(fail("'...' must end the row"));
            }
            if c == "..." {
                row.truncated = true;
            } else {
                row.cells.push(c.parse().map_err(|_| fail("bad integer cell"))?);
            }
        }
        spec.rows.push(row);
    }
    Ok(specs)
}

/// The 81 printed tables, in order.
pub fn reference_tables() -> &'static [TableSpec] {
    static TABLES: OnceLock<Vec<TableSpec>> = OnceLock::new();
    TABLES.get_or_init(|| parse_reference(REFERENCE).expect("bundled reference tables are well formed"))
}

pub fn reference_table(table_no: u32) -> Option<&'static TableSpec> {
    reference_tables().iter().find(|t| t.table_no == table_no)
}

/// Rows `n = 0..=n_max` of the coefficients of a closure of `A_n`, computed
/// from the pair by the closed form. Each row runs to the degree of its
/// polynomial, or is padded/cut to `k_max + 1` cells when `k_max` is given.
pub fn table(e: &CatalogEntry, kind: ClosureKind, n_max: u32, k_max: Option<usize>) -> Vec<Vec<BigInt>> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let p = repeat_closure(&e.pair, n, kind);
            let k = k_max.unwrap_or_else(|| p.degree().unwrap_or(0));
            p.coeff_row(k)
        })
        .collect()
}

/// Generates a printed table by number from its first listed entry.
pub fn table_by_number(table_no: u32, n_max: u32, k_max: Option<usize>) -> Option<Vec<Vec<BigInt>>> {
    let spec = reference_table(table_no)?;
    let e = entry(*spec.entries.first()?)?;
    Some(table(e, spec.kind, n_max, k_max))
}

fn width(rows: &[Vec<BigInt>]) -> usize {
    rows.iter().map(Vec::len).max().unwrap_or(0)
}

fn padded(row: &[BigInt], w: usize) -> impl Iterator<Item = String> + '_ {
    (0..w).map(move |k| row.get(k).map_or_else(|| "0".to_string(), BigInt::to_string))
}

/// Header `n,k0,k1,...`; short rows are zero-padded. Rows are numbered
/// from `first_n`.
pub fn to_csv(rows: &[Vec<BigInt>], first_n: u32) -> String {
    let w = width(rows);
    let mut out = String::from("n");
    for k in 0..w {
        out.push_str(&format!(",k{k}"));
    }
    out.push('\n');
    for (n, row) in (first_n..).zip(rows) {
        out.push_str(&n.to_string());
        for c in padded(row, w) {
            out.push(',');
            out.push_str(&c);
        }
        out.push('\n');
    }
    out
}

/// Markdown grid; cells past the end of a row are left blank.
pub fn to_markdown(rows: &[Vec<BigInt>], first_n: u32) -> String {
    let w = width(rows);
    let mut out = String::from("| n \\ k |");
    for k in 0..w {
        out.push_str(&format!(" {k} |"));
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(w));
    out.push('\n');
    for (n, row) in (first_n..).zip(rows) {
        out.push_str(&format!("| {n} |"));
        for k in 0..w {
            match row.get(k) {
                Some(c) => out.push_str(&format!(" {c} |")),
                None => out.push_str("  |"),
            }
        }
        out.push('\n');
    }
    out
}

fn json_row(row: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(
        row.iter()
            .map(|c| serde_json::Value::Number(c.to_string().parse().expect("integers are valid JSON numbers")))
            .collect(),
    )
}

/// A table for export: its key (usually the table number), the `n` of the
/// first row and the rows.
pub type NamedTable = (String, u32, Vec<Vec<BigInt>>);

/// `{"<key>": {"<n>": [c0, c1, ...]}}` with exact integers.
pub fn to_json(tables: &[NamedTable]) -> String {
    let mut top = serde_json::Map::new();
    for (key, first_n, rows) in tables {
        let body = (*first_n..)
            .zip(rows)
            .map(|(n, r)| (n.to_string(), json_row(r)))
            .collect();
        top.insert(key.clone(), serde_json::Value::Object(body));
    }
    serde_json::to_string_pretty(&serde_json::Value::Object(top)).expect("JSON values serialize")
}

/// Cells where `generated` disagrees with the printed prefix of `printed`,
/// as `(n, k, printed, generated)`; missing generated cells count as zero.
pub fn compare_rows(printed: &[PrintedRow], generated: &[Vec<BigInt>]) -> Vec<(usize, usize, BigInt, BigInt)> {
    let mut bad = Vec::new();
    for (n, row) in printed.iter().enumerate() {
        let gen = generated.get(n).map(Vec::as_slice).unwrap_or(&[]);
        for (k, c) in row.cells.iter().enumerate() {
            let g = gen.get(k).cloned().unwrap_or_default();
            if &g != c {
                bad.push((n, k, c.clone(), g));
            }
        }
        if !row.truncated && gen.len() > row.cells.len() && gen[row.cells.len()..].iter().any(|g| g != &BigInt::default()) {
            bad.push((n, row.cells.len(), BigInt::default(), gen[row.cells.len()].clone()));
        }
    }
    bad
}
