use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::args::Format;
use crate::Result;

pub const SCHEMA_VERSION: &str = "1";

pub type Row = Map<String, Value>;

/// One command's emission.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub params: Map<String, Value>,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl OutputRecord {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            params,
            rows: Vec::new(),
            seed: None,
        }
    }
}

/// A JSON number, or `null` for NaN and infinities.
pub fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

pub fn to_json(record: &OutputRecord) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("records serialize");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Header from the first row's keys; every row carries the same columns.
pub fn to_csv(record: &OutputRecord) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    if let Some(first) = record.rows.first() {
        w.write_record(first.keys())?;
        for row in &record.rows {
            w.write_record(first.keys().map(|k| row.get(k).map(cell).unwrap_or_default()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn emit(record: &OutputRecord, format: Format, out: Option<&Path>) -> Result<()> {
    let text = match format {
        Format::Json => to_json(record),
        Format::Csv => to_csv(record)?,
    };
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
