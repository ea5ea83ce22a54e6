//! Floating-point stability of the two sides of Sylvester's identity.
//!
//! The weighted power sum divides by products of node gaps and cancels
//! heavily when nodes cluster; `h_k` is a sum of positive-coefficient
//! monomials. Both are computed in `f64` and compared with the exact value
//! on the same (dyadic) nodes.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::field::{Float64, Rational};
use crate::identities::{relative_error, weighted_power_sum, IdentityError, NodeSet};
use crate::sampling::trial_rng;
use crate::symfun::h_fast;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityRecord {
    pub n: usize,
    pub d: u64,
    /// Smallest pairwise gap of the nodes actually used.
    pub node_spread: f64,
    /// `None` when the float result was not finite (then `flagged`).
    pub rel_error_lhs: Option<f64>,
    pub rel_error_rhs: Option<f64>,
    #[serde(default)]
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilitySummary {
    pub n: usize,
    pub d: u64,
    pub spread: f64,
    pub trials: u64,
    pub median_lhs: Option<f64>,
    pub max_lhs: Option<f64>,
    pub median_rhs: Option<f64>,
    pub max_rhs: Option<f64>,
    pub flagged: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    pub d_list: Vec<u64>,
    pub spreads: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_list.is_empty() || self.d_list.is_empty() || self.spreads.is_empty() {
            return Err(CliError::Config(
                "n, d and spread lists must be non-empty".into(),
            ));
        }
        if let Some(n) = self.n_list.iter().find(|&&n| n < 2) {
            return Err(CliError::Config(format!("n = {n} is below 2")));
        }
        if let Some(s) = self.spreads.iter().find(|s| !(s.is_finite() && **s > 0.0)) {
            return Err(CliError::Config(format!(
                "spread {s} must be positive and finite"
            )));
        }
        if self.trials < 1 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        Ok(())
    }
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Both float sides at `nodes` against the exact rational value of
/// `h_{d-n+1}` on the same nodes.
pub fn stability_record(nodes: &[f64], d: u64) -> Result<StabilityRecord, IdentityError> {
    let float_ns = NodeSet::new(nodes.iter().map(|&x| Float64(x)).collect(), &())?;
    let exact_nodes = nodes
        .iter()
        .map(|&x| {
            Rational::from_f64(x)
                .ok_or_else(|| IdentityError::Parameter(format!("node {x} is not finite")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = nodes.len();
    let k = d as i64 - n as i64 + 1;
    let exact = h_fast(k, &exact_nodes, &()).to_f64();

    let lhs = weighted_power_sum(&float_ns, d).get();
    let rhs = h_fast(k, float_ns.nodes(), &()).get();
    let rel_lhs = finite(relative_error(lhs, exact));
    let rel_rhs = finite(relative_error(rhs, exact));
    Ok(StabilityRecord {
        n,
        d,
        node_spread: float_ns.min_gap(),
        rel_error_lhs: rel_lhs,
        rel_error_rhs: rel_rhs,
        flagged: rel_lhs.is_none() || rel_rhs.is_none() || !exact.is_finite(),
    })
}

/// `n` increasing nodes starting in `[-1, 1)`, consecutive gaps drawn from
/// `[spread, 2 spread)`.
pub fn spread_nodes<R: Rng + ?Sized>(rng: &mut R, n: usize, spread: f64) -> Vec<f64> {
    let mut x = rng.gen_range(-1.0..1.0);
    let mut nodes = Vec::with_capacity(n);
    for _ in 0..n {
        nodes.push(x);
        x += spread * (1.0 + rng.gen::<f64>());
    }
    nodes
}

fn median(mut v: Vec<f64>) -> Option<f64> {
    if v.is_empty() {
        return None;
    }
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Some(if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    })
}

fn summarize(n: usize, d: u64, spread: f64, records: &[StabilityRecord]) -> StabilitySummary {
    let lhs: Vec<f64> = records.iter().filter_map(|r| r.rel_error_lhs).collect();
    let rhs: Vec<f64> = records.iter().filter_map(|r| r.rel_error_rhs).collect();
    let max = |v: &[f64]| v.iter().copied().reduce(f64::max);
    StabilitySummary {
        n,
        d,
        spread,
        trials: records.len() as u64,
        max_lhs: max(&lhs),
        max_rhs: max(&rhs),
        median_lhs: median(lhs),
        median_rhs: median(rhs),
        flagged: records.iter().filter(|r| r.flagged).count() as u64,
    }
}

/// One record per (n, d, spread, trial) plus a summary per configuration,
/// in configuration order.
pub fn cmd_bench_stability(
    cfg: &BenchConfig,
) -> Result<(Vec<StabilityRecord>, Vec<StabilitySummary>), CliError> {
    cfg.validate()?;
    let mut records = Vec::new();
    let mut summaries = Vec::new();
    let mut stream = 0u64;
    for &n in &cfg.n_list {
        for &d in &cfg.d_list {
            for &spread in &cfg.spreads {
                let mut batch = Vec::with_capacity(cfg.trials as usize);
                for _ in 0..cfg.trials {
                    let mut rng = trial_rng(cfg.seed, stream);
                    stream += 1;
                    let nodes = spread_nodes(&mut rng, n, spread);
                    let rec = stability_record(&nodes, d)
                        .map_err(|e| CliError::Config(format!("spread {spread} too small: {e}")))?;
                    batch.push(rec);
                }
                summaries.push(summarize(n, d, spread, &batch));
                records.extend(batch);
            }
        }
    }
    Ok((records, summaries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separated_nodes_are_accurate() {
        let rec = stability_record(&[1.0, 2.0], 3).unwrap();
        assert!(rec.rel_error_lhs.unwrap() <= 1e-12);
        assert!(rec.rel_error_rhs.unwrap() <= 1e-12);
        assert!(!rec.flagged);
        assert_eq!(rec.node_spread, 1.0);
    }

    #[test]
    fn top_euler_degree_is_finite() {
        let rec = stability_record(&[0.25, 1.5, 3.0, 7.0], 3).unwrap();
        assert!(rec.rel_error_lhs.is_some_and(|e| e.is_finite()));
        assert_eq!(rec.rel_error_rhs, Some(0.0));
    }

    #[test]
    fn spread_is_respected() {
        let mut rng = trial_rng(3, 0);
        let nodes = spread_nodes(&mut rng, 8, 1e-3);
        let ns = NodeSet::new(nodes.iter().map(|&x| Float64(x)).collect(), &()).unwrap();
        assert!(ns.min_gap() >= 1e-3 * (1.0 - 1e-9));
    }

    #[test]
    fn medians() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(vec![4.0, 1.0]), Some(2.5));
        assert_eq!(median(vec![]), None);
    }

    #[test]
    fn rejects_bad_spreads() {
        let cfg = BenchConfig {
            n_list: vec![3],
            d_list: vec![4],
            spreads: vec![0.0],
            trials: 1,
            seed: 0,
        };
        assert!(cmd_bench_stability(&cfg).is_err());
    }
}
