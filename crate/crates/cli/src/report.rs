use std::collections::BTreeMap;
use std::fmt::Write as _;

use multiserial::report::Check;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Output of one command. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub verdicts: Vec<Check>,
    pub warnings: Vec<String>,
    pub results: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            verdicts: Vec::new(),
            warnings: Vec::new(),
            results: BTreeMap::new(),
        }
    }

    pub fn verdict(&mut self, check: Check) {
        self.verdicts.push(check);
    }

    pub fn verdicts(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.verdicts.extend(checks);
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|c| c.passed)
    }

    /// 0 when every verdict passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "== {}", self.command).unwrap();
        for c in &self.verdicts {
            writeln!(out, "{}  {}", if c.passed { "PASS" } else { "FAIL" }, c.name).unwrap();
            for w in &c.witnesses {
                writeln!(out, "      - {w}").unwrap();
            }
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        for (k, v) in &self.results {
            write_value(&mut out, k, v, 0);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        Value::Null | Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) if items.iter().all(|x| matches!(x, Value::Number(_))) => {
            Some(v.to_string().replace(',', ", "))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        writeln!(out, "{pad}{key}: {s}").unwrap();
        return;
    }
    writeln!(out, "{pad}{key}:").unwrap();
    match v {
        Value::String(s) => {
            for line in s.lines() {
                if line.is_empty() {
                    out.push('\n');
                } else {
                    writeln!(out, "{pad}  {line}").unwrap();
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match (scalar(item), item) {
                    (Some(s), _) => writeln!(out, "{pad}  {s}").unwrap(),
                    (None, Value::Object(map)) => {
                        // one record per bullet
                        for (i, (k, x)) in map.iter().enumerate() {
                            let bullet = if i == 0 { "- " } else { "  " };
                            let mut nested = String::new();
                            write_value(&mut nested, k, x, 0);
                            for (j, line) in nested.lines().enumerate() {
                                let lead = if j == 0 { bullet } else { "  " };
                                writeln!(out, "{pad}  {lead}{line}").unwrap();
                            }
                        }
                    }
                    (None, _) => write_value(out, "-", item, depth + 1),
                }
            }
        }
        Value::Object(map) => {
            for (k, x) in map {
                write_value(out, k, x, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
