//! Command-line front end. Every subcommand prints line-delimited JSON
//! records by default (`--pretty` for a human-readable form).
//!
//! Exit status: 0 when every check passed, 1 on a verification failure,
//! 2 on a usage or configuration error.

mod bench;
mod campaign;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldConfig, FieldError, Float64, PrimeField, Rational, MERSENNE_61};
use crate::identities::{
    dilcher_check, egf_truncated_check, extended_sylvester_check, verify_euler,
    verify_extended_euler, verify_f2, verify_remainder, verify_sylvester, IdentityError,
    IdentityKind, IdentityReport, NodeSet, ReportRecord,
};

pub use bench::{
    cmd_bench_stability, spread_nodes, stability_record, BenchConfig, StabilityRecord,
    StabilitySummary,
};
pub use campaign::{
    cmd_campaign, CampaignConfig, CampaignFailure, CampaignOutcome, CampaignSummary,
};
pub use output::{Format, OutputRecord};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sylvester",
    version,
    about = "Exact checks of Sylvester's identity and its relatives"
)]
pub struct Cli {
    /// Print the supported identity names and exit
    #[arg(long)]
    pub list_identities: bool,

    /// Line-delimited JSON output (the default)
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,

    /// Human-readable output
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one identity at explicit (or default 1..n) nodes
    Verify(VerifyArgs),
    /// Run seeded randomized trials of one identity
    Campaign(CampaignArgs),
    /// Both sides of Dilcher's identity for a grid of (n, d)
    DilcherTable(DilcherArgs),
    /// Float64 relative errors of both sides of Sylvester's identity
    BenchStability(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    Rational,
    Prime,
    Float64,
}

impl FieldChoice {
    fn config(self, prime: u64) -> Result<FieldConfig, CliError> {
        Ok(match self {
            FieldChoice::Rational => FieldConfig::Rational,
            FieldChoice::Prime => {
                FieldConfig::prime(prime).map_err(|e| CliError::Config(e.to_string()))?
            }
            FieldChoice::Float64 => FieldConfig::Float64,
        })
    }
}

/// Inclusive `LO..HI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
        let range = RangeArg {
            lo: parse(lo)?,
            hi: parse(hi.trim_start_matches('='))?,
        };
        if range.lo > range.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(range)
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// One of the names printed by --list-identities
    #[arg(long)]
    pub identity: IdentityKind,
    /// Number of nodes; the nodes default to 1..n
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree (for egf use --k)
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Index of the omitted-variable elementary function (extended_euler)
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    /// Parameter of the f2 identity
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub a: String,
    /// Comma-separated integers or p/q fractions
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: Option<String>,
    #[arg(long, value_enum, default_value = "rational")]
    pub field: FieldChoice,
    #[arg(long, default_value_t = MERSENNE_61)]
    pub prime: u64,
    /// Truncation order of the egf check
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct CampaignArgs {
    #[arg(long)]
    pub identity: IdentityKind,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value = "2..8")]
    pub n_range: RangeArg,
    #[arg(long, default_value = "0..40")]
    pub d_range: RangeArg,
    #[arg(long, value_enum, default_value = "prime")]
    pub field: FieldChoice,
    #[arg(long, default_value_t = MERSENNE_61)]
    pub prime: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (defaults to the number of CPUs)
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct DilcherArgs {
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    #[arg(long, default_value_t = 6)]
    pub d_max: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated node counts
    #[arg(long, default_value = "3,6", value_parser = parse_list::<usize>)]
    pub n_list: std::vec::Vec<usize>,
    /// Comma-separated degrees
    #[arg(long, default_value = "4,20", value_parser = parse_list::<u64>)]
    pub d_list: std::vec::Vec<u64>,
    /// Comma-separated minimum node gaps
    #[arg(long, default_value = "1,1e-3,1e-6", value_parser = parse_list::<f64>)]
    pub spread_list: std::vec::Vec<f64>,
    #[arg(long, default_value_t = 20)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Only print the per-configuration summaries
    #[arg(long)]
    pub summary_only: bool,
}

/// One cell of the Dilcher table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DilcherCell {
    pub n: u64,
    pub d: u64,
    pub lhs: String,
    pub rhs: String,
    pub matches: bool,
}

fn parse_nodes<F: Field>(text: &str, ctx: &F::Context) -> Result<Vec<F>, CliError> {
    text.split(',')
        .map(|t| F::parse(t, ctx).map_err(|e| CliError::Usage(format!("bad node {t:?}: {e}"))))
        .collect()
}

fn node_set<F: Field>(args: &VerifyArgs, ctx: &F::Context) -> Result<NodeSet<F>, CliError> {
    let nodes = match (&args.nodes, args.n) {
        (Some(text), n) => {
            let nodes = parse_nodes::<F>(text, ctx)?;
            if let Some(n) = n.filter(|&n| n != nodes.len()) {
                return Err(CliError::Usage(format!(
                    "--n {n} but {} nodes given",
                    nodes.len()
                )));
            }
            nodes
        }
        (None, Some(n)) => (1..=n as i64).map(|i| F::from_i64(i, ctx)).collect(),
        (None, None) => return Err(CliError::Usage("give --nodes or --n".into())),
    };
    Ok(NodeSet::new(nodes, ctx)?)
}

fn required<T>(value: Option<T>, flag: &str, identity: IdentityKind) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{identity} needs --{flag}")))
}

fn nonneg(d: i64) -> Result<u64, CliError> {
    u64::try_from(d).map_err(|_| CliError::Usage(format!("--d must be non-negative, got {d}")))
}

fn verify_in<F: Field>(args: &VerifyArgs, ctx: &F::Context) -> Result<ReportRecord, CliError> {
    let id = args.identity;
    let ns = node_set::<F>(args, ctx)?;
    let report: IdentityReport<F> = match id {
        IdentityKind::Euler => verify_euler(&ns, required(args.d, "d", id)?)?,
        IdentityKind::Sylvester => verify_sylvester(&ns, nonneg(required(args.d, "d", id)?)?),
        IdentityKind::ExtendedEuler => {
            verify_extended_euler(&ns, required(args.d, "d", id)?, required(args.m, "m", id)?)?
        }
        IdentityKind::F2 => verify_f2(&ns, &F::parse(&args.a, ctx)?),
        IdentityKind::Egf => egf_truncated_check(&ns, required(args.k, "k", id)?)?,
        IdentityKind::ExtendedSylvester => {
            extended_sylvester_check(&ns, nonneg(required(args.d, "d", id)?)?)?
        }
        IdentityKind::Remainder => verify_remainder(&ns, nonneg(required(args.d, "d", id)?)?)?,
        IdentityKind::Dilcher => unreachable!("handled without nodes"),
    };
    Ok(report.to_record())
}

/// Evaluates one identity. Nodes default to `1..n` when not given.
pub fn cmd_verify(args: &VerifyArgs) -> Result<ReportRecord, CliError> {
    let field = args.field.config(args.prime)?;
    if args.identity == IdentityKind::Dilcher {
        if field != FieldConfig::Rational {
            return Err(CliError::Usage(
                "dilcher runs over the rationals only".into(),
            ));
        }
        let n = required(args.n, "n", args.identity)?;
        let d = nonneg(required(args.d, "d", args.identity)?)?;
        return Ok(dilcher_check(n as u64, d)?.to_record());
    }
    match field {
        FieldConfig::Rational => verify_in::<Rational>(args, &()),
        FieldConfig::Prime(m) => {
            field.check_node_count(args.n.unwrap_or(0))?;
            verify_in::<PrimeField>(args, &m)
        }
        FieldConfig::Float64 => verify_in::<Float64>(args, &()),
    }
}

/// Both sides of Dilcher's identity for `1 <= n <= n_max`, `1 <= d <= d_max`.
pub fn cmd_dilcher_table(n_max: u64, d_max: u64) -> Result<Vec<DilcherCell>, CliError> {
    if n_max < 1 || d_max < 1 {
        return Err(CliError::Usage(
            "--n-max and --d-max must be at least 1".into(),
        ));
    }
    let mut cells = Vec::with_capacity((n_max * d_max) as usize);
    for d in 1..=d_max {
        for n in 1..=n_max {
            let rec = dilcher_check(n, d)?.to_record();
            let text = |v: &crate::identities::RecordValue| match v {
                crate::identities::RecordValue::Scalar(s) => s.clone(),
                crate::identities::RecordValue::Vector(v) => v.join(","),
            };
            cells.push(DilcherCell {
                n,
                d,
                lhs: text(&rec.lhs),
                rhs: text(&rec.rhs),
                matches: rec.pass == Some(true),
            });
        }
    }
    Ok(cells)
}

fn emit(out: &mut dyn Write, format: Format, rec: OutputRecord) {
    // A closed stdout is not worth a panic.
    let _ = writeln!(out, "{}", rec.render(format));
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = if cli.pretty {
        Format::Pretty
    } else {
        Format::Json
    };
    if cli.list_identities {
        for id in IdentityKind::ALL {
            emit(
                out,
                format,
                OutputRecord::Identity {
                    name: id.name().into(),
                    description: id.description().into(),
                },
            );
        }
        return Ok(EXIT_PASS);
    }
    let Some(command) = cli.command else {
        return Err(CliError::Usage("no subcommand given (try --help)".into()));
    };
    match command {
        Command::Verify(args) => {
            let rec = cmd_verify(&args)?;
            let ok = rec.pass != Some(false);
            emit(out, format, OutputRecord::Report(rec));
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Campaign(args) => {
            let cfg = CampaignConfig {
                identity: args.identity,
                trials: args.trials,
                n_range: (args.n_range.lo as usize, args.n_range.hi as usize),
                d_range: (args.d_range.lo, args.d_range.hi),
                field: args.field.config(args.prime)?,
                seed: args.seed,
            };
            let outcome = cmd_campaign(&cfg, args.threads)?;
            for f in outcome.failures {
                emit(out, format, OutputRecord::CampaignFailure(f));
            }
            let ok = outcome.summary.failed == 0;
            emit(out, format, OutputRecord::CampaignSummary(outcome.summary));
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::DilcherTable(args) => {
            let cells = cmd_dilcher_table(args.n_max, args.d_max)?;
            let mismatches = cells.iter().filter(|c| !c.matches).count();
            let total = cells.len();
            for c in cells {
                emit(out, format, OutputRecord::DilcherCell(c));
            }
            emit(
                out,
                format,
                OutputRecord::DilcherSummary {
                    cells: total,
                    mismatches,
                },
            );
            Ok(if mismatches == 0 {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::BenchStability(args) => {
            let cfg = BenchConfig {
                n_list: args.n_list,
                d_list: args.d_list,
                spreads: args.spread_list,
                trials: args.trials,
                seed: args.seed,
            };
            let (records, summaries) = cmd_bench_stability(&cfg)?;
            if !args.summary_only {
                for r in records {
                    emit(out, format, OutputRecord::Stability(r));
                }
            }
            for s in summaries {
                emit(out, format, OutputRecord::StabilitySummary(s));
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{e}");
            return if code == 0 { EXIT_PASS } else { EXIT_USAGE };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
