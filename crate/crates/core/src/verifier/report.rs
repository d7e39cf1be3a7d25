//! Verification reports and their text, JSON and CSV forms.

use crate::systems::Provenance;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AllReal,
    NotAllReal,
    Degenerate,
    Budget,
    Internal,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::AllReal => "ALL REAL",
            Verdict::NotAllReal => "NOT ALL REAL",
            Verdict::Degenerate => "DEGENERATE",
            Verdict::Budget => "BUDGET",
            Verdict::Internal => "INTERNAL",
        }
    }

    /// Process exit status for the command line.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::AllReal => 0,
            Verdict::NotAllReal => 1,
            Verdict::Degenerate | Verdict::Budget => 2,
            Verdict::Internal => 3,
        }
    }
}

/// How far the pipeline got.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Complete,
    BudgetExhausted,
    GuardRefused,
    PositiveDimensional,
    Inconsistent,
    Failed,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    /// Closed form, available for `(J1)^(mp)`.
    pub closed_form: Option<String>,
    /// Socle computation in the cohomology ring.
    pub ring: Option<String>,
    /// Value used for the verdict.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminantAttempt {
    pub variable: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalOut {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub build_ms: u128,
    pub groebner_ms: u128,
    pub eliminant_ms: u128,
    pub roots_ms: u128,
    pub total_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub name: String,
    pub status: Status,
    pub verdict: Verdict,
    pub expected: Expected,
    pub quotient_dimension: Option<usize>,
    pub basis_size: Option<usize>,
    pub eliminant_variable: Option<String>,
    pub eliminant_degree: Option<usize>,
    /// Integer coefficients, constant term first.
    pub eliminant: Vec<String>,
    pub attempts: Vec<EliminantAttempt>,
    pub real_roots: Option<usize>,
    pub multiplicity_free: Option<bool>,
    /// The eliminant variable separates the solutions, so a lex basis would be in shape form.
    pub shape_lemma: Option<bool>,
    pub intervals: Vec<IntervalOut>,
    pub sturm_length: Option<usize>,
    pub warnings: Vec<String>,
    pub error: Option<String>,
    pub timings: Option<Timings>,
    pub provenance: Option<Provenance>,
}

impl VerificationReport {
    pub fn empty(name: &str) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            name: name.to_string(),
            status: Status::Failed,
            verdict: Verdict::Internal,
            expected: Expected::default(),
            quotient_dimension: None,
            basis_size: None,
            eliminant_variable: None,
            eliminant_degree: None,
            eliminant: Vec::new(),
            attempts: Vec::new(),
            real_roots: None,
            multiplicity_free: None,
            shape_lemma: None,
            intervals: Vec::new(),
            sturm_length: None,
            warnings: Vec::new(),
            error: None,
            timings: None,
            provenance: None,
        }
    }

    pub fn expected_value(&self) -> Option<usize> {
        self.expected.value.as_ref().and_then(|v| v.parse().ok())
    }

    /// Copy with timings removed, for golden comparisons.
    pub fn without_timings(&self) -> Self {
        VerificationReport { timings: None, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap_or_default()
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        rows.push(("instance".into(), self.name.clone()));
        rows.push(("verdict".into(), self.verdict.label().into()));
        rows.push(("status".into(), format!("{:?}", self.status)));
        let exp = match (&self.expected.closed_form, &self.expected.ring) {
            (Some(c), Some(r)) => format!("{} (closed form {}, ring {})", self.expected.value.clone().unwrap_or_default(), c, r),
            _ => self.expected.value.clone().unwrap_or_else(|| "-".into()),
        };
        rows.push(("expected".into(), exp));
        rows.push(("quotient dimension".into(), opt(self.quotient_dimension)));
        rows.push(("basis size".into(), opt(self.basis_size)));
        rows.push((
            "eliminant".into(),
            match (&self.eliminant_variable, self.eliminant_degree) {
                (Some(v), Some(d)) => format!("degree {} in {}", d, v),
                _ => "-".into(),
            },
        ));
        rows.push(("real roots".into(), opt(self.real_roots)));
        rows.push(("multiplicity free".into(), self.multiplicity_free.map(|b| b.to_string()).unwrap_or_else(|| "-".into())));
        rows.push(("shape lemma".into(), self.shape_lemma.map(|b| b.to_string()).unwrap_or_else(|| "-".into())));
        rows.push(("sturm chain".into(), opt(self.sturm_length)));
        if let Some(t) = &self.timings {
            rows.push(("time (ms)".into(), format!("{} (groebner {}, eliminant {})", t.total_ms, t.groebner_ms, t.eliminant_ms)));
        }
        let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{:<w$}  {}\n", k, v, w = w));
        }
        for iv in &self.intervals {
            out.push_str(&format!("{:<w$}  ({}, {}]  ~ {:.6}\n", "root", iv.lo, iv.hi, iv.approx, w = w));
        }
        for msg in &self.warnings {
            out.push_str(&format!("warning: {}\n", msg));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {}\n", e));
        }
        out
    }
}
