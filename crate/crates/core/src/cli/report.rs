//! Sweep reports and their CSV / JSON encodings.
//!
//! Both encodings use the same keys, in this order:
//!
//! ```text
//! generators,a,d,q,r,formula_id,precond,formula_value,oracle_value,match,anomaly
//! ```
//!
//! In CSV the generators are space separated (`5 6 8`) and absent values are
//! empty fields; in JSON the generators are an array and absent values are
//! `null`.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 11] = [
    "generators",
    "a",
    "d",
    "q",
    "r",
    "formula_id",
    "precond",
    "formula_value",
    "oracle_value",
    "match",
    "anomaly",
];

/// One formula evaluated against its oracle on one semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub generators: Vec<i64>,
    pub a: Option<i64>,
    pub d: Option<i64>,
    pub q: Option<i64>,
    pub r: Option<i64>,
    pub formula_id: String,
    pub precond: bool,
    pub formula_value: Option<i64>,
    pub oracle_value: Option<i64>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub anomaly: Option<String>,
}

impl Row {
    pub fn new(generators: &[i64], formula_id: &str) -> Self {
        Self {
            generators: generators.to_vec(),
            a: None,
            d: None,
            q: None,
            r: None,
            formula_id: formula_id.to_owned(),
            precond: true,
            formula_value: None,
            oracle_value: None,
            matches: None,
            anomaly: None,
        }
    }

    pub fn family(mut self, a: i64, d: i64, q: i64, r: i64) -> Self {
        self.a = Some(a);
        self.d = Some(d);
        self.q = Some(q);
        self.r = Some(r);
        self
    }

    pub fn precond(mut self, holds: bool) -> Self {
        self.precond = holds;
        self
    }

    /// Records both values; the match flag compares them.
    pub fn values(mut self, formula: i64, oracle: i64) -> Self {
        self.formula_value = Some(formula);
        self.oracle_value = Some(oracle);
        self.matches = Some(formula == oracle);
        self
    }

    pub fn matched(mut self, matches: bool) -> Self {
        self.matches = Some(matches);
        self
    }

    pub fn anomaly(mut self, note: impl Into<String>) -> Self {
        self.anomaly = Some(note.into());
        self
    }

    /// A precondition-satisfied row whose formula disagrees with the oracle
    /// and is not a documented anomaly.
    pub fn is_mismatch(&self) -> bool {
        self.precond && self.matches == Some(false) && self.anomaly.is_none()
    }

    fn sort_key(&self) -> (Option<i64>, Option<i64>, &[i64], &str) {
        (self.a, self.d, &self.generators, &self.formula_id)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub evaluated: usize,
    pub matched: usize,
    pub mismatches: usize,
    pub anomalies: usize,
}

impl Summary {
    pub fn record(&mut self, row: &Row) {
        self.rows += 1;
        if row.precond && row.matches.is_some() {
            self.evaluated += 1;
        }
        if row.precond && row.matches == Some(true) {
            self.matched += 1;
        }
        if row.is_mismatch() {
            self.mismatches += 1;
        }
        if row.anomaly.is_some() {
            self.anomalies += 1;
        }
    }

    pub fn merge(&mut self, other: &Summary) {
        self.rows += other.rows;
        self.evaluated += other.evaluated;
        self.matched += other.matched;
        self.mismatches += other.mismatches;
        self.anomalies += other.anomalies;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<Row>,
}

impl SweepReport {
    /// Sorts rows by `(a, d, generators, formula_id)`.
    pub fn from_rows(mut rows: Vec<Row>) -> Self {
        rows.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
        Self { rows }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for row in &self.rows {
            s.record(row);
        }
        s
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.is_mismatch())
    }

    pub fn rows_for<'a>(&'a self, formula_id: &'a str) -> impl Iterator<Item = &'a Row> + 'a {
        self.rows.iter().filter(move |r| r.formula_id == formula_id)
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRecord {
    generators: String,
    a: Option<i64>,
    d: Option<i64>,
    q: Option<i64>,
    r: Option<i64>,
    formula_id: String,
    precond: bool,
    formula_value: Option<i64>,
    oracle_value: Option<i64>,
    #[serde(rename = "match")]
    matches: Option<bool>,
    anomaly: Option<String>,
}

impl From<&Row> for CsvRecord {
    fn from(row: &Row) -> Self {
        let generators = row
            .generators
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        CsvRecord {
            generators,
            a: row.a,
            d: row.d,
            q: row.q,
            r: row.r,
            formula_id: row.formula_id.clone(),
            precond: row.precond,
            formula_value: row.formula_value,
            oracle_value: row.oracle_value,
            matches: row.matches,
            anomaly: row.anomaly.clone(),
        }
    }
}

impl TryFrom<CsvRecord> for Row {
    type Error = Error;

    fn try_from(rec: CsvRecord) -> Result<Self> {
        let generators = rec
            .generators
            .split_whitespace()
            .map(|g| {
                g.parse::<i64>()
                    .map_err(|_| Error::InternalInconsistency(format!("bad generator {g:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Row {
            generators,
            a: rec.a,
            d: rec.d,
            q: rec.q,
            r: rec.r,
            formula_id: rec.formula_id,
            precond: rec.precond,
            formula_value: rec.formula_value,
            oracle_value: rec.oracle_value,
            matches: rec.matches,
            anomaly: rec.anomaly,
        })
    }
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::InternalInconsistency(format!("report I/O: {e}"))
}

/// Writes the rows as CSV; an empty report still gets the header line.
pub fn write_csv<W: Write>(rows: &[Row], out: W) -> std::io::Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.serialize(CsvRecord::from(row))?;
    }
    writer.flush()
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<Row>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers().map_err(io_error)?;
    if header.iter().ne(CSV_HEADER) {
        return Err(io_error(format!("unexpected header {header:?}")));
    }
    reader
        .deserialize::<CsvRecord>()
        .map(|rec| rec.map_err(io_error).and_then(Row::try_from))
        .collect()
}

pub fn write_json<W: Write>(rows: &[Row], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer(&mut out, rows)?;
    out.write_all(b"\n")
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<Row>> {
    serde_json::from_reader(input).map_err(io_error)
}
