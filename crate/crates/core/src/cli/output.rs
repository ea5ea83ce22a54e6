use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::bench::{StabilityRecord, StabilitySummary};
use super::campaign::{CampaignFailure, CampaignSummary};
use super::DilcherCell;
use crate::identities::{RecordValue, ReportRecord};

/// Every line the CLI prints, tagged by `"record"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum OutputRecord {
    Identity { name: String, description: String },
    Report(ReportRecord),
    CampaignFailure(CampaignFailure),
    CampaignSummary(CampaignSummary),
    DilcherCell(DilcherCell),
    DilcherSummary { cells: usize, mismatches: usize },
    Stability(StabilityRecord),
    StabilitySummary(StabilitySummary),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Pretty,
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("records serialize"),
            Format::Pretty => self.pretty(),
        }
    }

    /// Parses one JSON line back into a record.
    pub fn parse_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }

    fn pretty(&self) -> String {
        match self {
            OutputRecord::Identity { name, description } => format!("{name:<20} {description}"),
            OutputRecord::Report(r) => pretty_report(r),
            OutputRecord::CampaignFailure(f) => {
                let mut s = format!("FAIL trial {} (seed {})", f.trial, f.seed);
                if let Some(e) = &f.error {
                    let _ = write!(s, ": {e}");
                }
                if let Some(r) = &f.report {
                    let _ = write!(s, ": {}", pretty_report(r));
                }
                s
            }
            OutputRecord::CampaignSummary(c) => format!(
                "{} over {}{}: {}/{} passed, {} failed (seed {}, n in {}..{}, d in {}..{})",
                c.identity,
                c.field,
                c.prime.map(|p| format!(" p={p}")).unwrap_or_default(),
                c.passed,
                c.trials,
                c.failed,
                c.seed,
                c.n_range[0],
                c.n_range[1],
                c.d_range[0],
                c.d_range[1],
            ),
            OutputRecord::DilcherCell(c) => format!(
                "n={:<3} d={:<3} lhs={} rhs={} {}",
                c.n,
                c.d,
                c.lhs,
                c.rhs,
                if c.matches { "ok" } else { "MISMATCH" }
            ),
            OutputRecord::DilcherSummary { cells, mismatches } => {
                format!("{cells} cells, {mismatches} mismatches")
            }
            OutputRecord::Stability(r) => format!(
                "n={} d={} gap={:e} rel_err lhs={} rhs={}{}",
                r.n,
                r.d,
                r.node_spread,
                fmt_err(r.rel_error_lhs),
                fmt_err(r.rel_error_rhs),
                if r.flagged { " FLAGGED" } else { "" }
            ),
            OutputRecord::StabilitySummary(s) => format!(
                "n={} d={} spread={:e} trials={}: lhs median {} max {} | rhs median {} max {} | flagged {}",
                s.n,
                s.d,
                s.spread,
                s.trials,
                fmt_err(s.median_lhs),
                fmt_err(s.max_lhs),
                fmt_err(s.median_rhs),
                fmt_err(s.max_rhs),
                s.flagged
            ),
        }
    }
}

fn fmt_err(e: Option<f64>) -> String {
    e.map(|v| format!("{v:.3e}")).unwrap_or_else(|| "-".into())
}

fn pretty_value(v: &RecordValue) -> String {
    match v {
        RecordValue::Scalar(s) => s.clone(),
        RecordValue::Vector(v) => format!("[{}]", v.join(", ")),
    }
}

fn pretty_report(r: &ReportRecord) -> String {
    let mut s = format!("{} [{}] n={}", r.identity, r.field, r.n);
    for (name, val) in [("d", r.d), ("m", r.m)] {
        if let Some(v) = val {
            let _ = write!(s, " {name}={v}");
        }
    }
    if let Some(k) = r.k {
        let _ = write!(s, " K={k}");
    }
    if let Some(a) = &r.a {
        let _ = write!(s, " a={a}");
    }
    let _ = write!(
        s,
        ": lhs={} rhs={}",
        pretty_value(&r.lhs),
        pretty_value(&r.rhs)
    );
    match (r.pass, r.relative_error) {
        (Some(true), _) => s.push_str(" PASS"),
        (Some(false), _) => s.push_str(" FAIL"),
        (None, Some(e)) => {
            let _ = write!(s, " rel_err={e:.3e}");
        }
        (None, None) => s.push_str(" rel_err=overflow"),
    }
    for c in &r.checks {
        if c.lhs != c.rhs {
            let _ = write!(
                s,
                "\n  {}: {} vs {}",
                c.label,
                pretty_value(&c.lhs),
                pretty_value(&c.rhs)
            );
        }
    }
    s
}
