//! Byte-stable CSV and JSON rendering of a report.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Table,
    Verification,
    Scan,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Table => "table",
            Kind::Verification => "verification",
            Kind::Scan => "scan",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Exact integer as a decimal string.
    Int(String),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn int(v: impl ToString) -> Self {
        Cell::Int(v.to_string())
    }

    pub fn text(v: impl Into<String>) -> Self {
        Cell::Text(v.into())
    }

    pub fn opt_int(v: Option<impl ToString>) -> Self {
        v.map_or(Cell::Empty, Cell::int)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(s) | Cell::Text(s) => s.clone(),
            Cell::Float(x) => format_float(*x),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(s) | Cell::Text(s) => Value::String(s.clone()),
            Cell::Float(x) if x.is_finite() => format_float(*x)
                .parse::<Number>()
                .map(Value::Number)
                .unwrap_or(Value::Null),
            Cell::Float(_) | Cell::Empty => Value::Null,
        }
    }
}

/// 17 significant digits in scientific notation, enough to round-trip.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

#[derive(Debug, Clone)]
pub struct ReportDocument {
    pub kind: Kind,
    pub command: String,
    pub parameters: Vec<(String, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Scan reports only; rendered as `#` lines after the CSV rows.
    pub summary: Vec<(String, Cell)>,
}

impl ReportDocument {
    pub fn new(kind: Kind, command: &str, columns: Vec<&'static str>) -> Self {
        Self {
            kind,
            command: command.to_string(),
            parameters: Vec::new(),
            columns,
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: Cell) {
        self.parameters.push((key.to_string(), value));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn summarize(&mut self, key: &str, value: Cell) {
        self.summary.push((key.to_string(), value));
    }

    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        let mut out = String::from_utf8(w.into_inner()?)?;
        for (k, v) in &self.summary {
            writeln!(out, "# {k}: {}", v.csv())?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> anyhow::Result<String> {
        let mut meta = Map::new();
        meta.insert("command".into(), Value::String(self.command.clone()));
        meta.insert(
            "version".into(),
            Value::String(env!("CARGO_PKG_VERSION").into()),
        );
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), v.json()))
            .collect();
        meta.insert("parameters".into(), Value::Object(params));

        let rows = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.to_string(), v.json()))
                        .collect(),
                )
            })
            .collect();

        let mut doc = Map::new();
        doc.insert("kind".into(), Value::String(self.kind.name().into()));
        doc.insert("metadata".into(), Value::Object(meta));
        doc.insert("rows".into(), Value::Array(rows));
        if self.kind == Kind::Scan || !self.summary.is_empty() {
            let summary = self
                .summary
                .iter()
                .map(|(k, v)| (k.clone(), v.json()))
                .collect();
            doc.insert("summary".into(), Value::Object(summary));
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(doc))?;
        out.push('\n');
        Ok(out)
    }
}
