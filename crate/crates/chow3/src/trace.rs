//! Deduction traces: ordered (label, exact value, conclusion) records
//! emitted by the checkers so every verdict can be re-derived from the
//! model by hand.

use std::fmt;

use crate::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq)]
pub enum TraceValue {
    Rat(Rat),
    Int(i64),
    Bool(bool),
    Text(String),
    None,
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceValue::Rat(r) => write!(f, "{r}"),
            TraceValue::Int(n) => write!(f, "{n}"),
            TraceValue::Bool(b) => write!(f, "{b}"),
            TraceValue::Text(s) => write!(f, "{s}"),
            TraceValue::None => write!(f, "-"),
        }
    }
}

impl TraceValue {
    fn to_json(&self) -> serde_json::Value {
        match self {
            TraceValue::Rat(r) => rat::json(r),
            TraceValue::Int(n) => serde_json::json!(n),
            TraceValue::Bool(b) => serde_json::json!(b),
            TraceValue::Text(s) => serde_json::json!(s),
            TraceValue::None => serde_json::Value::Null,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    pub label: String,
    pub value: TraceValue,
    pub conclusion: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DeductionTrace {
    pub steps: Vec<TraceStep>,
}

impl DeductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        label: impl Into<String>,
        value: TraceValue,
        conclusion: impl Into<String>,
    ) {
        self.steps.push(TraceStep {
            label: label.into(),
            value,
            conclusion: conclusion.into(),
        });
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.steps
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "label": s.label,
                        "value": s.value.to_json(),
                        "conclusion": s.conclusion,
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for DeductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}: {}", step.label, step.value)?;
            if step.conclusion.is_empty() {
                writeln!(f)?;
            } else {
                writeln!(f, "  [{}]", step.conclusion)?;
            }
        }
        Ok(())
    }
}
