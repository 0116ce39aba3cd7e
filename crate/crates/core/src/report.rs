//! Structured outcome of a single identity or bound check.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Exact algebraic identity. A failure is an implementation bug.
    Exact,
    /// Eigenvalue inequality. A failure beyond tolerance is a finding.
    Inequality,
    /// Evaluated and recorded, never asserted.
    Exploratory,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum ReportValue {
    None,
    Real(f64),
    Exact(String),
}

impl fmt::Display for ReportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportValue::None => write!(f, "-"),
            ReportValue::Real(x) => write!(f, "{}", fmt_real(*x)),
            ReportValue::Exact(s) => write!(f, "{s}"),
        }
    }
}

/// Fixed-precision rendering that never prints `-0.000000`.
pub fn fmt_real(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub key: String,
    pub value: String,
}

/// `holds` implies `applicable`; `slack` is `rhs - lhs` for one-sided scalar
/// bounds and the smaller of the two margins for two-sided ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub name: String,
    pub kind: CheckKind,
    pub applicable: bool,
    pub holds: bool,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub slack: Option<f64>,
    pub details: Vec<Detail>,
    pub witness: Option<String>,
}

impl TheoremReport {
    pub fn exact(name: &str, holds: bool, lhs: ReportValue, rhs: ReportValue) -> Self {
        TheoremReport {
            name: name.to_string(),
            kind: CheckKind::Exact,
            applicable: true,
            holds,
            lhs,
            rhs,
            slack: None,
            details: Vec::new(),
            witness: None,
        }
    }

    /// One-sided bound `lhs <= rhs`, accepted when `rhs - lhs >= -tol`.
    pub fn upper_bound(name: &str, kind: CheckKind, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = rhs - lhs;
        TheoremReport {
            name: name.to_string(),
            kind,
            applicable: true,
            holds: slack >= -tol,
            lhs: ReportValue::Real(lhs),
            rhs: ReportValue::Real(rhs),
            slack: Some(slack),
            details: Vec::new(),
            witness: None,
        }
    }

    pub fn inapplicable(name: &str, kind: CheckKind, reason: &str) -> Self {
        TheoremReport {
            name: name.to_string(),
            kind,
            applicable: false,
            holds: false,
            lhs: ReportValue::None,
            rhs: ReportValue::None,
            slack: None,
            details: vec![Detail { key: "reason".into(), value: reason.into() }],
            witness: None,
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.details.push(Detail { key: key.to_string(), value: value.to_string() });
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn detail(&self, key: &str) -> Option<&str> {
        self.details.iter().find(|d| d.key == key).map(|d| d.value.as_str())
    }

    /// Applicable and not holding.
    pub fn failed(&self) -> bool {
        self.applicable && !self.holds
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} applicable={} holds={} lhs={} rhs={} slack={}",
            self.name,
            self.applicable,
            self.holds,
            self.lhs,
            self.rhs,
            self.slack.map_or_else(|| "-".to_string(), fmt_real),
        )?;
        for d in &self.details {
            write!(f, " {}={}", d.key, d.value)?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}
