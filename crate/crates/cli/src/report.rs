//! What a command produced, and its rendering as text or as a run record.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::input::Inputs;

/// Fixed 12-significant-digit rendering used for every float.
pub fn f12(x: f64) -> String {
    abtqft::invariants::fmt_float(x)
}

/// `f12` as a JSON number, so that JSON output is as stable as text.
pub fn j12(x: f64) -> Value {
    f12(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

/// `3` for one coordinate, `(1,-2)` otherwise.
pub fn coords(v: &[i64]) -> String {
    match v {
        [x] => x.to_string(),
        _ => format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub data: Map<String, Value>,
    pub conventions: Vec<String>,
    /// A check ran and did not hold; exit status 1.
    pub failed: bool,
}

impl Report {
    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.data.insert(key.into(), v.into());
        self
    }
}

#[derive(Serialize)]
struct InputRecord<'a> {
    file: &'a str,
    sha256: &'a str,
}

#[derive(Serialize)]
struct RunRecord<'a> {
    command: &'a [String],
    inputs: Vec<InputRecord<'a>>,
    outputs: &'a Map<String, Value>,
    text: &'a [String],
    conventions: &'a [String],
    version: &'static str,
}

pub fn render_json(command: &[String], inputs: &Inputs, report: &Report) -> String {
    let record = RunRecord {
        command,
        inputs: inputs
            .files
            .iter()
            .map(|(file, sha256)| InputRecord { file, sha256 })
            .collect(),
        outputs: &report.data,
        text: &report.lines,
        conventions: &report.conventions,
        version: env!("CARGO_PKG_VERSION"),
    };
    serde_json::to_string_pretty(&record).expect("record serializes")
}
