//! Deterministic CSV / JSON table writer.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(x),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

/// Full round-trip precision.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Ordered `key = value` metadata written ahead of the data.
#[derive(Debug, Clone, Default)]
pub struct Meta(Vec<(String, String)>);

impl Meta {
    pub fn new(command: &str) -> Self {
        let mut m = Meta::default();
        m.push("catwva", catwva::VERSION);
        m.push("catwva-cli", env!("CARGO_PKG_VERSION"));
        m.push("command", command);
        m
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    pub fn num(&mut self, key: &str, value: f64) -> &mut Self {
        self.push(key, fmt_num(value))
    }

    pub fn with(&self, key: &str, value: impl ToString) -> Self {
        let mut m = self.clone();
        m.push(key, value);
        m
    }
}

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub fn render(meta: &Meta, table: &Table, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for (k, v) in &meta.0 {
                let _ = writeln!(out, "# {k} = {v}");
            }
            out.push_str(&table.columns.join(","));
            out.push('\n');
            for row in &table.rows {
                let line: Vec<String> = row.iter().map(Cell::csv).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut m = Map::new();
            for (k, v) in &meta.0 {
                m.insert(k.clone(), Value::String(v.clone()));
            }
            let rows: Vec<Value> =
                table.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
            let doc = json!({ "meta": Value::Object(m), "columns": table.columns, "rows": rows });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable table");
            s.push('\n');
            s
        }
    }
}

pub fn ensure_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })
}

/// Write one table as `<dir>/<stem>.<ext>` and return the path.
pub fn write_table(dir: &Path, stem: &str, meta: &Meta, table: &Table, format: Format) -> CliResult<PathBuf> {
    let path = dir.join(format!("{stem}.{}", format.extension()));
    fs::write(&path, render(meta, table, format)).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(path)
}
