use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one command.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub field: Option<String>,
    pub ok: bool,
    pub result: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Report {
    pub fn success(command: String, field: Option<String>, result: Map<String, Value>) -> Self {
        Report {
            command,
            field,
            ok: true,
            result,
            error: None,
            elapsed_ms: None,
        }
    }

    pub fn failure(command: String, field: Option<String>, error: String) -> Self {
        Report {
            command,
            field,
            ok: false,
            result: Map::new(),
            error: Some(error),
            elapsed_ms: None,
        }
    }
}

pub fn render_value(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = xs.iter().map(render_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(render_value).collect();
            format!("[{}]", parts.join("; "))
        }
        Value::Object(m) => {
            let parts: Vec<String> = m
                .iter()
                .map(|(k, v)| format!("{k}={}", render_value(v)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Aligned `key  value` lines under a `> command` header.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "> {}", r.command);
        let mut rows: Vec<(String, String)> = Vec::new();
        if let Some(f) = &r.field {
            rows.push(("field".into(), f.clone()));
        }
        rows.push(("ok".into(), r.ok.to_string()));
        for (k, v) in &r.result {
            rows.push((k.clone(), render_value(v)));
        }
        if let Some(e) = &r.error {
            rows.push(("error".into(), e.clone()));
        }
        if let Some(t) = r.elapsed_ms {
            rows.push(("elapsed_ms".into(), format!("{t:.1}")));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            let _ = writeln!(out, "  {k:<width$}  {v}");
        }
    }
    out
}

pub fn render_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
