use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Outcome of an audited identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Divergent,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Divergent => "divergent",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Both numerically evaluated sides of one identity and how far apart they are.
#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub claim_id: String,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_discrepancy: f64,
    pub rel_discrepancy: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub notes: String,
}

impl AuditReport {
    /// Builds a report whose verdict is pass exactly when the relative
    /// discrepancy is within `tolerance`, fail otherwise.
    pub fn compare(claim_id: &str, lhs: Complex64, rhs: Complex64, tolerance: f64) -> Self {
        let abs = (lhs - rhs).norm();
        let rel = abs / rhs.norm().max(lhs.norm()).max(f64::MIN_POSITIVE);
        let verdict = if rel <= tolerance { Verdict::Pass } else { Verdict::Fail };
        AuditReport {
            claim_id: claim_id.to_string(),
            lhs,
            rhs,
            abs_discrepancy: abs,
            rel_discrepancy: rel,
            tolerance,
            verdict,
            notes: String::new(),
        }
    }

    /// Same as [`compare`](Self::compare) but with the verdict chosen by the caller.
    pub fn with_verdict(
        claim_id: &str,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
        verdict: Verdict,
    ) -> Self {
        let mut r = Self::compare(claim_id, lhs, rhs, tolerance);
        r.verdict = verdict;
        r
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        let text = text.into();
        if self.notes.is_empty() {
            self.notes = text;
        } else {
            self.notes.push_str("; ");
            self.notes.push_str(&text);
        }
        self
    }

    /// JSON object with sorted keys and shortest round-trip float formatting.
    pub fn to_json(&self) -> Value {
        json!({
            "claim_id": self.claim_id,
            "lhs": { "re": finite_or_null(self.lhs.re), "im": finite_or_null(self.lhs.im) },
            "rhs": { "re": finite_or_null(self.rhs.re), "im": finite_or_null(self.rhs.im) },
            "abs_discrepancy": finite_or_null(self.abs_discrepancy),
            "rel_discrepancy": finite_or_null(self.rel_discrepancy),
            "tolerance": finite_or_null(self.tolerance),
            "verdict": self.verdict.as_str(),
            "notes": self.notes,
        })
    }
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::String(format!("{x}"))
    }
}
