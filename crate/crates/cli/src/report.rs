use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use superbracket::exact::{format_rational, Matrix, Rational};
use superbracket::report::{Residual, Violations};
use superbracket::GradedBasis;

/// Number of violating tuples copied into a report.
const REPORTED_SAMPLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Computed data that carries no verdict.
    Info,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub details: Value,
}

impl Check {
    pub fn new(name: &str, passed: bool, details: Value) -> Self {
        Check {
            name: name.to_string(),
            verdict: if passed { Verdict::Pass } else { Verdict::Fail },
            details,
        }
    }

    pub fn info(name: &str, details: Value) -> Self {
        Check {
            name: name.to_string(),
            verdict: Verdict::Info,
            details,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            subject: subject.into(),
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.subject);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Info => "info",
            };
            let mut details = c.details.to_string();
            if details.len() > 96 {
                let cut = (0..=96).rev().find(|&i| details.is_char_boundary(i)).unwrap_or(0);
                details.truncate(cut);
                details.push_str("...");
            }
            let _ = writeln!(out, "  {:width$}  {verdict}  {details}", c.name);
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "  ({ms} ms)");
        }
        let _ = writeln!(out, "overall: {}", if self.passes() { "PASS" } else { "FAIL" });
        out
    }
}

pub fn q(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn q_vec(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| q_vec(m.row(i))).collect())
}

pub fn names(basis: &GradedBasis, indices: &[usize]) -> Value {
    json!(indices.iter().map(|&i| basis.name(i)).collect::<Vec<_>>())
}

/// Violating tuples given by basis indices, with residual vectors
/// expressed in `basis` when they have its length.
pub fn residuals(basis: &GradedBasis, v: &Violations<Residual>) -> Value {
    let first: Vec<Value> = v
        .samples
        .iter()
        .take(REPORTED_SAMPLES)
        .map(|r| json!({ "at": names(basis, &r.indices), "residual": q_vec(&r.residual) }))
        .collect();
    json!({ "count": v.count, "first": first })
}

pub fn pair_violation(basis: &GradedBasis, pair: Option<(usize, usize)>) -> Value {
    match pair {
        Some((j, k)) => json!({ "at": names(basis, &[j, k]) }),
        None => Value::Null,
    }
}
