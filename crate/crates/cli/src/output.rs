//! CSV and JSON-lines report writers.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value};
use thetaxi_core::Complex64;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Float(f64),
    Complex(Complex64),
    Text(String),
    Bool(bool),
    Int(i64),
    Missing,
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Float(v)
    }
}

impl From<Complex64> for Field {
    fn from(v: Complex64) -> Self {
        Field::Complex(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<i64> for Field {
    fn from(v: i64) -> Self {
        Field::Int(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Missing, Into::into)
    }
}

/// `a+bi` with 17 significant digits in each part.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{sign}{:.16e}i", z.re, z.im.abs())
}

fn format_float(v: f64) -> String {
    if v == 0.0 || (1e-4..1e6).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::Float(v) => format_float(*v),
            Field::Complex(z) => format_complex(*z),
            Field::Text(t) if t.contains([',', '"', '\n']) => {
                format!("\"{}\"", t.replace('"', "\"\""))
            }
            Field::Text(t) => t.clone(),
            Field::Bool(b) => b.to_string(),
            Field::Int(i) => i.to_string(),
            Field::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Float(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Field::Complex(z) => Value::String(format_complex(*z)),
            Field::Text(t) => Value::String(t.clone()),
            Field::Bool(b) => Value::Bool(*b),
            Field::Int(i) => Value::from(*i),
            Field::Missing => Value::Null,
        }
    }
}

pub struct Report {
    columns: Vec<&'static str>,
    json: bool,
    out: Box<dyn Write>,
}

impl Report {
    /// Writes to `path`, or standard output when absent. The CSV header goes
    /// out immediately.
    pub fn new(
        columns: &[&'static str],
        json: bool,
        path: Option<&Path>,
    ) -> Result<Self, CliError> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Self::with_writer(columns, json, out)
    }

    pub fn with_writer(
        columns: &[&'static str],
        json: bool,
        out: Box<dyn Write>,
    ) -> Result<Self, CliError> {
        let mut report = Report {
            columns: columns.to_vec(),
            json,
            out,
        };
        if !json {
            writeln!(report.out, "{}", columns.join(","))?;
        }
        Ok(report)
    }

    pub fn row(&mut self, fields: &[Field]) -> Result<(), CliError> {
        assert_eq!(
            fields.len(),
            self.columns.len(),
            "row width must match the header"
        );
        if self.json {
            let object: Map<String, Value> = self
                .columns
                .iter()
                .zip(fields)
                .map(|(c, f)| (c.to_string(), f.json()))
                .collect();
            writeln!(self.out, "{}", Value::Object(object))?;
        } else {
            let cells: Vec<String> = fields.iter().map(Field::csv).collect();
            writeln!(self.out, "{}", cells.join(","))?;
        }
        Ok(())
    }

    /// A trailing `# key=value ...` comment, or a `{"summary": {...}}` line.
    pub fn summary(&mut self, pairs: &[(&str, Field)]) -> Result<(), CliError> {
        if self.json {
            let object: Map<String, Value> = pairs
                .iter()
                .map(|(k, f)| (k.to_string(), f.json()))
                .collect();
            let mut outer = Map::new();
            outer.insert("summary".into(), Value::Object(object));
            writeln!(self.out, "{}", Value::Object(outer))?;
        } else {
            let parts: Vec<String> = pairs
                .iter()
                .map(|(k, f)| format!("{k}={}", f.csv()))
                .collect();
            writeln!(self.out, "# {}", parts.join(" "))?;
        }
        Ok(())
    }

    /// A free-text trailing line: `# text`, or `{"summary": "text"}`.
    pub fn note(&mut self, text: &str) -> Result<(), CliError> {
        if self.json {
            let mut outer = Map::new();
            outer.insert("summary".into(), Value::String(text.to_string()));
            writeln!(self.out, "{}", Value::Object(outer))?;
        } else {
            writeln!(self.out, "# {text}")?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.out.flush()?;
        Ok(())
    }
}
