use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Machine-readable record of a command run. Field names are stable.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub parameters: Value,
    pub results: Value,
    pub timing: Value,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub version: &'static str,
    pub field_moduli: BTreeSet<String>,
}

/// Collects checks and results while a command runs.
pub struct Recorder {
    started: Instant,
    checks: Vec<Check>,
    results: serde_json::Map<String, Value>,
    timing: serde_json::Map<String, Value>,
    moduli: BTreeSet<String>,
}

impl Recorder {
    pub fn new() -> Self {
        Recorder {
            started: Instant::now(),
            checks: Vec::new(),
            results: Default::default(),
            timing: Default::default(),
            moduli: BTreeSet::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn timed(&mut self, key: &str, secs: f64) {
        self.timing.insert(key.to_string(), json!(secs));
    }

    pub fn modulus(&mut self, m: Option<&String>) {
        if let Some(m) = m {
            self.moduli.insert(m.clone());
        }
    }

    /// Moves everything recorded by `other` into `self`, prefixing check names.
    pub fn absorb(&mut self, prefix: &str, other: Recorder) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
        self.results.insert(prefix.to_string(), Value::Object(other.results));
        self.timing
            .insert(prefix.to_string(), json!(other.started.elapsed().as_secs_f64()));
        self.moduli.extend(other.moduli);
    }

    pub fn finish(mut self, parameters: Value) -> RunReport {
        self.timing
            .insert("total_secs".into(), json!(self.started.elapsed().as_secs_f64()));
        let passed = self.checks.iter().all(|c| c.passed);
        RunReport {
            command: std::env::args().collect(),
            parameters,
            results: Value::Object(self.results),
            timing: Value::Object(self.timing),
            checks: self.checks,
            passed,
            version: env!("CARGO_PKG_VERSION"),
            field_moduli: self.moduli,
        }
    }
}
