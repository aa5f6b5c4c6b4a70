//! Run reports: a result table written as CSV or JSON lines, plus verdicts.

use std::fmt;
use std::io::{self, Write};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A table cell. Lists are written as JSON arrays, or space-separated in CSV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Text(String),
    List(Vec<String>),
}

impl Cell {
    pub fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> Self {
        Cell::List(items.into_iter().map(|t| t.to_string()).collect())
    }

    /// The CSV rendering.
    pub fn flat(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::List(items) => items.join(" "),
        }
    }
}

impl<T: fmt::Display> From<T> for Cell {
    fn from(v: T) -> Self {
        Cell::Text(v.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub checks: Vec<CheckResult>,
    pub duration: Duration,
}

impl RunReport {
    pub fn new(columns: &[&str]) -> Self {
        RunReport {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl fmt::Display) {
        self.params.push((key.to_string(), value.to_string()));
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            verdict: Verdict::of(ok),
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn write_table<W: Write>(&self, out: W, format: Format) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::flat))?;
        }
        w.flush()
    }

    fn write_json<W: Write>(&self, mut out: W) -> io::Result<()> {
        for row in &self.rows {
            let object: Map<String, Value> = self
                .columns
                .iter()
                .zip(row)
                .map(|(k, v)| (k.clone(), serde_json::to_value(v).expect("cells serialize")))
                .collect();
            serde_json::to_writer(&mut out, &object)?;
            writeln!(out)?;
        }
        Ok(())
    }

    /// Human-readable summary: command, parameters, verdicts, duration.
    pub fn write_summary<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# {}", self.command)?;
        for (k, v) in &self.params {
            writeln!(out, "#   {k} = {v}")?;
        }
        for c in &self.checks {
            if c.detail.is_empty() {
                writeln!(out, "{} {}", c.verdict, c.name)?;
            } else {
                writeln!(out, "{} {}: {}", c.verdict, c.name, c.detail)?;
            }
        }
        writeln!(out, "# {} rows in {:.3}s", self.rows.len(), self.duration.as_secs_f64())
    }
}

/// Reads a table written by [`RunReport::write_table`] back as the column
/// names and the CSV rendering of every cell.
pub fn read_table(text: &str, format: Format) -> Result<(Vec<String>, Vec<Vec<String>>), String> {
    match format {
        Format::Csv => {
            let mut r = csv::Reader::from_reader(text.as_bytes());
            let columns = r
                .headers()
                .map_err(|e| e.to_string())?
                .iter()
                .map(String::from)
                .collect();
            let rows = r
                .records()
                .map(|rec| rec.map(|r| r.iter().map(String::from).collect()))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            Ok((columns, rows))
        }
        Format::Json => {
            let mut columns: Vec<String> = Vec::new();
            let mut rows = Vec::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let object: Map<String, Value> = serde_json::from_str(line).map_err(|e| e.to_string())?;
                if columns.is_empty() {
                    columns = object.keys().cloned().collect();
                }
                let row = columns
                    .iter()
                    .map(|k| {
                        let v = object.get(k).ok_or_else(|| format!("missing key {k}"))?;
                        serde_json::from_value::<Cell>(v.clone())
                            .map(|c| c.flat())
                            .map_err(|e| e.to_string())
                    })
                    .collect::<Result<_, String>>()?;
                rows.push(row);
            }
            Ok((columns, rows))
        }
    }
}

impl RunReport {
    /// The table as [`read_table`] would return it.
    pub fn flat_table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::flat).collect())
            .collect();
        (self.columns.clone(), rows)
    }
}
