//! Command output: one JSON document or a plain-text rendering of the same
//! data.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use setmap::{Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (heading, value) in [("input", &self.input), ("result", &self.result)] {
            writeln!(out, "{heading}:").unwrap();
            if let Value::Object(map) = value {
                for (k, v) in map {
                    match v {
                        Value::Array(items) if items.iter().any(Value::is_object) => {
                            writeln!(out, "  {k}:").unwrap();
                            for item in items {
                                writeln!(out, "    {}", inline(item)).unwrap();
                            }
                        }
                        _ => writeln!(out, "  {k}: {}", inline(v)).unwrap(),
                    }
                }
            }
        }
        if !self.checks.is_empty() {
            writeln!(out, "checks:").unwrap();
            for c in &self.checks {
                writeln!(out, "  {} {}", if c.pass { "PASS" } else { "FAIL" }, c.name).unwrap();
            }
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(" "),
        Value::Object(map) => {
            map.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

/// Canonical `p/q` or `p`.
pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

/// Coefficients low degree first; the zero polynomial is `["0"]`.
pub fn poly_coeffs(p: &Poly) -> Value {
    if p.is_zero() {
        return Value::Array(vec![Value::String("0".into())]);
    }
    rationals(p.coeffs())
}
