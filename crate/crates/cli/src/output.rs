use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::CliError;

/// What a command produced: a JSON artifact plus the same data as a table.
#[derive(Debug, Clone)]
pub struct Output {
    pub command: &'static str,
    pub json: Map<String, Value>,
    pub notes: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn new(command: &'static str) -> Self {
        Output { command, json: Map::new(), notes: Vec::new(), header: Vec::new(), rows: Vec::new() }
    }

    pub fn field(mut self, key: &str, v: impl Serialize) -> Self {
        self.json.insert(key.into(), serde_json::to_value(v).expect("serializable"));
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        m.insert("schema".into(), json!(1));
        m.insert("command".into(), json!(self.command));
        m.extend(self.json.clone());
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Failure(e.to_string());
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Failure(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf8"))
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for n in &self.notes {
            let _ = writeln!(s, "{n}");
        }
        if self.header.is_empty() {
            return s;
        }
        if !self.notes.is_empty() {
            s.push('\n');
        }
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |s: &mut String, cells: &[String]| {
            let parts: Vec<String> =
                cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
            let _ = writeln!(s, "{}", parts.join("  ").trim_end());
        };
        line(&mut s, &self.header);
        line(&mut s, &width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
        for r in &self.rows {
            line(&mut s, r);
        }
        s
    }
}

pub fn f(x: f64) -> String {
    format!("{x:.12e}")
}
