//! Command output: one schema, rendered as JSON or as an aligned table.

use std::fmt::Write as _;

use cycweight::Field;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub enum Method {
    Formula,
    Bruteforce,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Bruteforce => "bruteforce",
        }
    }
}

/// `{field, code, result, method}`; big integers are decimal strings.
pub struct Report {
    field: Value,
    exponents: Vec<u64>,
    result: Map<String, Value>,
    method: Method,
}

impl Report {
    pub fn new(method: Method) -> Self {
        Report {
            field: json!({"p": null, "m": null, "modulus": null}),
            exponents: Vec::new(),
            result: Map::new(),
            method,
        }
    }

    pub fn field(mut self, f: &Field) -> Self {
        self.field = json!({"p": f.p(), "m": f.m(), "modulus": f.modulus().coeffs()});
        self
    }

    /// Field known only by its parameters (no modulus constructed).
    pub fn field_params(mut self, p: u64, m: u64) -> Self {
        self.field = json!({"p": p, "m": m, "modulus": null});
        self
    }

    pub fn exponents(mut self, exps: &[u64]) -> Self {
        self.exponents = exps.to_vec();
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "code": {"exponents": self.exponents},
            "result": self.result,
            "method": self.method.as_str(),
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n",
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        let field = match (&self.field["p"], &self.field["m"]) {
            (Value::Null, _) => None,
            (p, m) => Some(format!("GF({p}^{m})")),
        };
        if let Some(field) = field {
            let modulus = match &self.field["modulus"] {
                Value::Array(c) => format!(", modulus {}", poly_string(c)),
                _ => String::new(),
            };
            rows.push(("field".into(), field + &modulus));
        }
        if !self.exponents.is_empty() {
            let exps: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
            rows.push(("exponents".into(), exps.join(", ")));
        }
        rows.push(("method".into(), self.method.as_str().into()));
        let mut nested = String::new();
        for (key, value) in &self.result {
            match value {
                Value::Array(items) if items.iter().any(Value::is_object) => {
                    let _ = writeln!(nested, "{key}:");
                    for item in items {
                        let _ = writeln!(nested, "  {}", inline(item));
                    }
                }
                _ => rows.push((key.clone(), inline(value))),
            }
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out + &nested
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(", "),
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect::<Vec<_>>().join("  "),
        other => other.to_string(),
    }
}

fn poly_string(coeffs: &[Value]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter_map(|(i, c)| {
            let c = c.as_u64().unwrap_or(0);
            let x = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            match (c, i) {
                (0, _) => None,
                (c, 0) => Some(c.to_string()),
                (1, _) => Some(x),
                (c, _) => Some(format!("{c}{x}")),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

pub fn bigs(values: &[BigUint]) -> Value {
    Value::Array(values.iter().map(big).collect())
}
