//! Query result records with text and structured (JSON) rendering.
//! Rationals are rendered `p/q` in text and as numerator/denominator
//! string pairs in JSON; no decimals anywhere.

use std::fmt;

use crate::rat::{self, Rat};
use crate::trace::DeductionTrace;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rat(Rat),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Value {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Rat(r) => rat::json(r),
            Value::Int(n) => serde_json::json!(n),
            Value::Bool(b) => serde_json::json!(b),
            Value::Text(s) => serde_json::json!(s),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Record {
    pub line: usize,
    pub query: String,
    pub fields: Vec<(String, Value)>,
    pub trace: Option<DeductionTrace>,
    /// Outcome of an `expect=` assertion attached to the query.
    pub pass: Option<bool>,
}

impl Record {
    pub fn new(line: usize, query: impl Into<String>) -> Self {
        Record {
            line,
            query: query.into(),
            ..Record::default()
        }
    }

    pub fn field(&mut self, name: impl Into<String>, value: Value) -> &mut Self {
        self.fields.push((name.into(), value));
        self
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.pass == Some(false))
            .count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push_str(&format!("[line {}] {}\n", record.line, record.query));
            for (name, value) in &record.fields {
                let text = value.to_string();
                if text.contains('\n') {
                    out.push_str(&format!("  {name}:\n"));
                    for inner in text.lines() {
                        out.push_str(&format!("    {inner}\n"));
                    }
                } else {
                    out.push_str(&format!("  {name} = {text}\n"));
                }
            }
            if let Some(trace) = &record.trace {
                out.push_str("  trace:\n");
                for line in trace.to_string().lines() {
                    out.push_str(&format!("    {line}\n"));
                }
            }
            if let Some(pass) = record.pass {
                out.push_str(&format!(
                    "  expectation: {}\n",
                    if pass { "pass" } else { "FAIL" }
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.records
                .iter()
                .map(|record| {
                    let mut fields = serde_json::Map::new();
                    for (name, value) in &record.fields {
                        fields.insert(name.clone(), value.to_json());
                    }
                    let mut obj = serde_json::Map::new();
                    obj.insert("line".to_string(), serde_json::json!(record.line));
                    obj.insert("query".to_string(), serde_json::json!(record.query));
                    obj.insert("fields".to_string(), serde_json::Value::Object(fields));
                    if let Some(trace) = &record.trace {
                        obj.insert("trace".to_string(), trace.to_json());
                    }
                    if let Some(pass) = record.pass {
                        obj.insert("pass".to_string(), serde_json::json!(pass));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    #[test]
    fn rationals_render_exactly() {
        let mut record = Record::new(3, "intersect z z z");
        record.field("value", Value::Rat(frac(-3, 2)));
        record.pass = Some(true);
        let report = Report {
            records: vec![record],
        };
        let text = report.to_text();
        assert!(text.contains("[line 3] intersect z z z"));
        assert!(text.contains("value = -3/2"));
        assert!(text.contains("expectation: pass"));
        let json = report.to_json();
        assert_eq!(json[0]["fields"]["value"]["num"], "-3");
        assert_eq!(json[0]["fields"]["value"]["den"], "2");
        assert_eq!(report.failures(), 0);
    }
}
