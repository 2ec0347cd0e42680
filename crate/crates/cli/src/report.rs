//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "hopf-deform/report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::BudgetExceeded => 3,
        }
    }
}

/// One checked property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    /// `full`, `sampled(seed=…, count=…)` or `exact` for closed-form comparisons.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Certificate {
    pub fn exact(name: impl Into<String>, passed: bool) -> Self {
        Certificate { name: name.into(), passed, mode: "exact".into(), witness: None }
    }

    pub fn with_witness(mut self, w: Option<String>) -> Self {
        if !self.passed {
            self.witness = w;
        }
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub status: Status,
    pub inputs: Value,
    pub conventions: BTreeMap<String, String>,
    pub results: BTreeMap<String, Value>,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            status: Status::Pass,
            inputs,
            conventions: BTreeMap::new(),
            results: BTreeMap::new(),
            certificates: Vec::new(),
            error: None,
            timing: None,
        }
    }

    pub fn result(&mut self, key: &str, v: impl Serialize) {
        self.results.insert(key.into(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn convention(&mut self, key: &str, v: impl Into<String>) {
        self.conventions.insert(key.into(), v.into());
    }

    pub fn certify(&mut self, c: Certificate) {
        self.certificates.push(c);
    }

    /// Sets the status from the certificates unless an error is recorded.
    pub fn finish(&mut self) {
        if self.error.is_none() {
            self.status = if self.certificates.iter().all(|c| c.passed) { Status::Pass } else { Status::Fail };
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = serde_json::to_value(self.status).expect("serializable");
        let _ = writeln!(s, "{}: {}", self.command, status.as_str().unwrap_or_default());
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        for (k, v) in &self.results {
            match v {
                Value::String(t) => {
                    let _ = writeln!(s, "{k}: {t}");
                }
                Value::Array(items) if items.iter().all(|i| i.is_string()) && !items.is_empty() => {
                    let _ = writeln!(s, "{k}:");
                    for i in items {
                        let _ = writeln!(s, "  {}", i.as_str().unwrap_or_default());
                    }
                }
                _ => {
                    let _ = writeln!(s, "{k}: {v}");
                }
            }
        }
        for c in &self.certificates {
            let _ = writeln!(s, "[{}] {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.mode);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "       witness: {w}");
            }
        }
        for (k, v) in &self.conventions {
            let _ = writeln!(s, "convention {k}: {v}");
        }
        if let Some(t) = &self.timing {
            for (k, v) in t {
                let _ = writeln!(s, "time {k}: {v:.3}s");
            }
        }
        s
    }
}
