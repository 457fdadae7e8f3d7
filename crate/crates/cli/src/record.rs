//! Flat output records and their CSV, JSON and text renderings.

use std::io::Write;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    /// `None` renders as an empty CSV cell or JSON `null`.
    Num(Option<f64>),
    Text(String),
}

/// One output row: ordered `(column, cell)` pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, Cell)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: impl Into<String>, v: i64) -> Self {
        self.fields.push((key.into(), Cell::Int(v)));
        self
    }

    pub fn num(mut self, key: impl Into<String>, v: Option<f64>) -> Self {
        self.fields
            .push((key.into(), Cell::Num(v.filter(|x| x.is_finite()))));
        self
    }

    pub fn text(mut self, key: impl Into<String>, v: impl Into<String>) -> Self {
        self.fields.push((key.into(), Cell::Text(v.into())));
        self
    }

    pub fn push(&mut self, key: impl Into<String>, cell: Cell) {
        self.fields.push((key.into(), cell));
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(k, _)| k.as_str())
    }

    pub fn get(&self, key: &str) -> Option<&Cell> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, c)| c)
    }

    /// Numeric cell by column name.
    pub fn value(&self, key: &str) -> Option<f64> {
        match self.get(key)? {
            Cell::Num(v) => *v,
            Cell::Int(i) => Some(*i as f64),
            Cell::Text(_) => None,
        }
    }

    /// Copy with every float rounded to `digits` significant digits.
    pub fn rounded(&self, digits: u8) -> Record {
        let fields = self
            .fields
            .iter()
            .map(|(k, c)| {
                let c = match c {
                    Cell::Num(v) => Cell::Num(v.map(|x| round_sig(x, digits))),
                    other => other.clone(),
                };
                (k.clone(), c)
            })
            .collect();
        Record { fields }
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.fields.len()))?;
        for (k, c) in &self.fields {
            match c {
                Cell::Int(i) => map.serialize_entry(k, i)?,
                Cell::Num(v) => map.serialize_entry(k, v)?,
                Cell::Text(t) => map.serialize_entry(k, t)?,
            }
        }
        map.end()
    }
}

/// Rounds to `digits` significant digits through decimal scientific notation.
pub fn round_sig(x: f64, digits: u8) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let p = usize::from(digits.max(1)) - 1;
    format!("{x:.p$e}").parse().expect("formatted float parses")
}

fn render_num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 {
        "0".to_string()
    } else if (1e-5..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn render_cell(c: &Cell, missing: &str) -> String {
    match c {
        Cell::Int(i) => i.to_string(),
        Cell::Num(Some(x)) => render_num(*x),
        Cell::Num(None) => missing.to_string(),
        Cell::Text(t) => t.clone(),
    }
}

/// Writes `records` (which share one schema) to `out`.
pub fn write_records<W: Write>(
    out: W,
    records: &[Record],
    format: Format,
    digits: u8,
) -> std::io::Result<()> {
    let rows: Vec<Record> = records.iter().map(|r| r.rounded(digits)).collect();
    match format {
        Format::Csv => write_csv(out, &rows),
        Format::Json => write_json(out, &rows),
        Format::Text => write_text(out, &rows),
    }
}

fn write_csv<W: Write>(out: W, rows: &[Record]) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if let Some(first) = rows.first() {
        w.write_record(first.keys())?;
    }
    for r in rows {
        w.write_record(r.fields.iter().map(|(_, c)| render_cell(c, "")))?;
    }
    w.flush()
}

fn write_json<W: Write>(mut out: W, rows: &[Record]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)
}

fn write_text<W: Write>(mut out: W, rows: &[Record]) -> std::io::Result<()> {
    let Some(first) = rows.first() else {
        return Ok(());
    };
    let header: Vec<String> = first.keys().map(str::to_string).collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.fields.iter().map(|(_, c)| render_cell(c, "-")).collect())
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(&header))?;
    for row in &body {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}
