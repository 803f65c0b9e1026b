//! Verification reports and their JSON / text serializations.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bound::BoundSpec;
use crate::position::{Ruleset, RulesetKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// No counterexample at this bound, but the claim is unproven.
    Open,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Open => "open",
        }
    }
}

/// Whether a check tests a proven claim or a conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Proven,
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub position: Vec<u32>,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Counterexample {
    pub fn new(
        position: impl Into<Vec<u32>>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Counterexample {
            position: position.into(),
            expected: expected.into(),
            actual: actual.into(),
            detail: detail.into(),
        }
    }
}

/// Outcome of one sweep. Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub ruleset: RulesetKind,
    pub threshold: u32,
    pub bound: BoundSpec,
    pub checked: u64,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    /// Per-clause or per-class counts. Not part of the verdict.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tallies: BTreeMap<String, u64>,
}

impl VerificationReport {
    /// Sorts `violations` by position, keeps at most `cap`, and derives
    /// the verdict. The full violation count goes to the `violations`
    /// tally.
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        check: &str,
        ruleset: &Ruleset,
        bound: &BoundSpec,
        checked: u64,
        claim: Claim,
        mut violations: Vec<Counterexample>,
        cap: usize,
        elapsed_ms: u64,
        mut tallies: BTreeMap<String, u64>,
    ) -> Self {
        violations.sort();
        tallies.insert("violations".into(), violations.len() as u64);
        let verdict = match (violations.is_empty(), claim) {
            (false, _) => Verdict::Fail,
            (true, Claim::Proven) => Verdict::Pass,
            (true, Claim::Conjecture) => Verdict::Open,
        };
        violations.truncate(cap);
        VerificationReport {
            check: check.to_string(),
            ruleset: ruleset.kind,
            threshold: ruleset.merge_threshold,
            bound: *bound,
            checked,
            verdict,
            counterexamples: violations,
            elapsed_ms,
            tallies,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn tally(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }

    /// One summary line without timing, so identical runs print identical
    /// text.
    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ruleset={} threshold={} bound={} piles={} checked={} counterexamples={}",
            self.check,
            self.verdict.as_str(),
            self.ruleset,
            self.threshold,
            self.bound,
            self.bound.pile_count,
            self.checked,
            self.tally("violations"),
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = self.summary_line();
        out.push('\n');
        for (k, v) in &self.tallies {
            writeln!(out, "  {k} = {v}").expect("writing to a String");
        }
        for c in &self.counterexamples {
            let pos: Vec<String> = c.position.iter().map(u32::to_string).collect();
            writeln!(
                out,
                "  counterexample ({}) expected={} actual={} {}",
                pos.join(","),
                c.expected,
                c.actual,
                c.detail
            )
            .expect("writing to a String");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    Json,
    #[default]
    Text,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format {other:?} (expected json or text)")),
        }
    }
}

pub fn render_reports(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => reports.iter().map(VerificationReport::to_text).collect(),
        ReportFormat::Json => match reports {
            [single] => single.to_json(),
            many => {
                let mut s = serde_json::to_string_pretty(many).expect("reports serialize");
                s.push('\n');
                s
            }
        },
    }
}

pub fn write_report(r: &VerificationReport, path: impl AsRef<Path>, format: ReportFormat) -> io::Result<()> {
    fs::write(path, render_reports(std::slice::from_ref(r), format))
}
