//! The structured report every command produces.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use entwine::entwine::EntwiningStructure;
use entwine::report::{Check, Report};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "entwine-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct StructureSummary {
    pub field: String,
    pub dim_a: usize,
    pub dim_c: usize,
    pub labels_a: Vec<String>,
    pub labels_c: Vec<String>,
    pub translation_map: bool,
}

impl StructureSummary {
    pub fn of(e: &EntwiningStructure) -> Self {
        StructureSummary {
            field: e.field().to_string(),
            dim_a: e.dim_a(),
            dim_c: e.dim_c(),
            labels_a: e.algebra().labels().to_vec(),
            labels_c: e.coalgebra().labels().to_vec(),
            translation_map: e.galois().is_some(),
        }
    }
}

/// Timing and the human-readable lines are not serialized, so the JSON form
/// is identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct CliReport {
    pub schema: &'static str,
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSummary>,
    pub checks: Vec<Check>,
    pub tables: BTreeMap<String, Value>,
    pub passed: bool,
    #[serde(skip)]
    pub lines: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CliReport {
    pub fn new(command: Vec<String>) -> Self {
        CliReport {
            schema: SCHEMA,
            command,
            structure: None,
            checks: Vec::new(),
            tables: BTreeMap::new(),
            passed: true,
            lines: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, report: Report) {
        for c in report.checks {
            self.push(c);
        }
    }

    pub fn table(&mut self, name: &str, value: impl Serialize) {
        self.tables.insert(name.to_string(), serde_json::to_value(value).expect("serializable table"));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "entwine {}", self.command.join(" "));
        if let Some(s) = &self.structure {
            let _ = writeln!(
                out,
                "structure: dim A = {}, dim C = {}, field {}{}",
                s.dim_a,
                s.dim_c,
                s.field,
                if s.translation_map { ", Hopf–Galois" } else { "" }
            );
        }
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => {
                    let _ = writeln!(out, "{status} {} (witness: {w})", c.name);
                }
                None => {
                    let _ = writeln!(out, "{status} {}", c.name);
                }
            }
        }
        let _ = writeln!(out, "time: {:.1} ms", self.elapsed.as_secs_f64() * 1000.0);
        let _ = writeln!(out, "{}", if self.passed { "all checks passed" } else { "some checks FAILED" });
        out
    }
}
