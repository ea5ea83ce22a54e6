//! Randomized campaigns: many seeded trials of one identity.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::field::{FieldConfig, FieldKind, PrimeField, Rational};
use crate::identities::{
    dilcher_check, egf_truncated_check, extended_sylvester_check, verify_euler,
    verify_extended_euler, verify_f2, verify_remainder, verify_sylvester, IdentityError,
    IdentityKind, IdentityReport, ReportRecord,
};
use crate::sampling::{random_nodes, trial_rng, Sample};

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub identity: IdentityKind,
    pub trials: u64,
    /// Inclusive.
    pub n_range: (usize, usize),
    /// Inclusive; intersected per trial with the degrees the identity
    /// accepts for the sampled `n`.
    pub d_range: (u64, u64),
    pub field: FieldConfig,
    pub seed: u64,
}

impl CampaignConfig {
    /// Degrees valid for `identity` at `n` nodes, as an inclusive range
    /// (`None` means unbounded above). `F2` takes no degree.
    fn identity_degrees(&self, n: usize) -> Option<(u64, Option<u64>)> {
        let n = n as u64;
        match self.identity {
            IdentityKind::Euler | IdentityKind::ExtendedEuler => Some((0, Some(n - 1))),
            IdentityKind::Sylvester => Some((0, None)),
            IdentityKind::F2 => None,
            IdentityKind::Dilcher => Some((1, None)),
            IdentityKind::Egf => Some((n - 1, None)),
            IdentityKind::ExtendedSylvester | IdentityKind::Remainder => Some((n, None)),
        }
    }

    fn d_bounds(&self, n: usize) -> Option<(u64, u64)> {
        let (lo, hi) = self.identity_degrees(n)?;
        let lo = lo.max(self.d_range.0);
        let hi = hi.map_or(self.d_range.1, |h| h.min(self.d_range.1));
        Some((lo, hi))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let config = |msg: String| Err(CliError::Config(msg));
        if self.trials < 1 {
            return config("trials must be at least 1".into());
        }
        let (n_lo, n_hi) = self.n_range;
        if n_lo < 2 || n_lo > n_hi {
            return config(format!("n range {n_lo}..{n_hi} must satisfy 2 <= lo <= hi"));
        }
        if self.d_range.0 > self.d_range.1 {
            return config(format!(
                "d range {}..{} is empty",
                self.d_range.0, self.d_range.1
            ));
        }
        if let Err(e) = self.field.check_node_count(n_hi) {
            return config(e.to_string());
        }
        match (&self.field, self.identity) {
            (FieldConfig::Float64, _) => {
                return config("campaigns need an exact field (rational or prime)".into())
            }
            (FieldConfig::Prime(_), IdentityKind::Dilcher) => {
                return config("dilcher runs over the rationals only".into())
            }
            (FieldConfig::Prime(m), IdentityKind::Egf) if m.get() <= self.d_range.1 => {
                return config(format!(
                    "egf needs K! invertible: prime {} must exceed max K {}",
                    m.get(),
                    self.d_range.1
                ));
            }
            _ => {}
        }
        for n in n_lo..=n_hi {
            if let Some((lo, hi)) = self.d_bounds(n) {
                if lo > hi {
                    return config(format!(
                        "no degree in {}..{} is valid for {} with n = {n}",
                        self.d_range.0, self.d_range.1, self.identity
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Reproduction info for one failed trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignFailure {
    pub identity: IdentityKind,
    pub seed: u64,
    pub trial: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub identity: IdentityKind,
    pub field: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    pub n_range: [usize; 2],
    pub d_range: [u64; 2],
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignOutcome {
    pub summary: CampaignSummary,
    /// Sorted by trial index.
    pub failures: Vec<CampaignFailure>,
}

type TrialResult = Result<ReportRecord, IdentityError>;

fn trial_generic<F: Sample>(cfg: &CampaignConfig, ctx: &F::Context, trial: u64) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, trial);
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let d = cfg.d_bounds(n).map(|(lo, hi)| rng.gen_range(lo..=hi));
    let degree = || d.expect("identity takes a degree");
    let ns = random_nodes::<F, _>(&mut rng, n, ctx);
    let report: IdentityReport<F> = match cfg.identity {
        IdentityKind::Euler => verify_euler(&ns, degree() as i64)?,
        IdentityKind::Sylvester => verify_sylvester(&ns, degree()),
        IdentityKind::ExtendedEuler => {
            let m = rng.gen_range(0..n as i64);
            verify_extended_euler(&ns, degree() as i64, m)?
        }
        IdentityKind::F2 => {
            let a = F::sample(&mut rng, ctx);
            verify_f2(&ns, &a)
        }
        IdentityKind::Egf => egf_truncated_check(&ns, degree() as usize)?,
        IdentityKind::ExtendedSylvester => extended_sylvester_check(&ns, degree())?,
        IdentityKind::Remainder => verify_remainder(&ns, degree())?,
        IdentityKind::Dilcher => unreachable!("dilcher trials take no nodes"),
    };
    Ok(report.to_record())
}

fn trial_dilcher(cfg: &CampaignConfig, trial: u64) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, trial);
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let (lo, hi) = cfg.d_bounds(n).expect("dilcher takes a degree");
    let d = rng.gen_range(lo..=hi);
    Ok(dilcher_check(n as u64, d)?.to_record())
}

fn run_trial(cfg: &CampaignConfig, trial: u64) -> TrialResult {
    match (&cfg.field, cfg.identity) {
        (FieldConfig::Rational, IdentityKind::Dilcher) => trial_dilcher(cfg, trial),
        (FieldConfig::Rational, _) => trial_generic::<Rational>(cfg, &(), trial),
        (FieldConfig::Prime(m), _) => trial_generic::<PrimeField>(cfg, m, trial),
        (FieldConfig::Float64, _) => unreachable!("rejected by validate"),
    }
}

/// Runs `cfg.trials` independent trials, on `threads` worker threads when
/// given (the rayon default otherwise). Output does not depend on the
/// thread count.
pub fn cmd_campaign(
    cfg: &CampaignConfig,
    threads: Option<usize>,
) -> Result<CampaignOutcome, CliError> {
    cfg.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    let results: Vec<TrialResult> = pool.install(|| {
        (0..cfg.trials)
            .into_par_iter()
            .map(|t| run_trial(cfg, t))
            .collect()
    });

    let failures: Vec<CampaignFailure> = results
        .into_iter()
        .enumerate()
        .filter_map(|(trial, res)| {
            let (error, report) = match res {
                Ok(rec) if rec.pass != Some(false) => return None,
                Ok(rec) => (None, Some(rec)),
                Err(e) => (Some(e.to_string()), None),
            };
            Some(CampaignFailure {
                identity: cfg.identity,
                seed: cfg.seed,
                trial: trial as u64,
                error,
                report,
            })
        })
        .collect();

    let failed = failures.len() as u64;
    let summary = CampaignSummary {
        identity: cfg.identity,
        field: cfg.field.kind(),
        prime: match cfg.field {
            FieldConfig::Prime(m) => Some(m.get()),
            _ => None,
        },
        seed: cfg.seed,
        trials: cfg.trials,
        passed: cfg.trials - failed,
        failed,
        n_range: [cfg.n_range.0, cfg.n_range.1],
        d_range: [cfg.d_range.0, cfg.d_range.1],
    };
    Ok(CampaignOutcome { summary, failures })
}
