use std::process::{Command, Output};

use sylvester::cli::OutputRecord;
use sylvester::field::{Field, PrimeModulus, Rational};
use sylvester::identities::{IdentityReport, RecordValue};
use sylvester::PrimeField;

fn sylvester(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylvester"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<OutputRecord> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| OutputRecord::parse_line(l).unwrap_or_else(|e| panic!("{l}: {e}")))
        .collect()
}

fn single_report(out: &Output) -> sylvester::identities::ReportRecord {
    match records(out).pop() {
        Some(OutputRecord::Report(r)) => r,
        other => panic!("expected a report, got {other:?}"),
    }
}

fn scalar(s: &str) -> RecordValue {
    RecordValue::Scalar(s.into())
}

#[test]
fn verify_sylvester_two_nodes() {
    let out = sylvester(&[
        "verify",
        "--identity",
        "sylvester",
        "--nodes",
        "1,2",
        "--d",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rec = single_report(&out);
    assert_eq!(
        (rec.lhs, rec.rhs, rec.pass),
        (scalar("7"), scalar("7"), Some(true))
    );
}

#[test]
fn verify_euler_zero_case() {
    let out = sylvester(&[
        "verify",
        "--identity",
        "euler",
        "--nodes",
        "1,2,3",
        "--d",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rec = single_report(&out);
    assert_eq!((rec.lhs, rec.pass), (scalar("0"), Some(true)));
}

#[test]
fn verify_f2_unit_parameter() {
    let out = sylvester(&["verify", "--identity", "f2", "--nodes", "1,2,3", "--a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = single_report(&out);
    assert_eq!((rec.lhs, rec.pass), (scalar("1"), Some(true)));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[
            "verify",
            "--identity",
            "sylvester",
            "--nodes",
            "1,2,2",
            "--d",
            "3",
        ],
        &[
            "verify",
            "--identity",
            "sylvester",
            "--nodes",
            "1,two",
            "--d",
            "3",
        ],
        &["verify", "--identity", "nope", "--n", "3"],
        &["verify", "--identity", "euler", "--n", "3", "--d", "7"],
        &[
            "verify",
            "--identity",
            "extended_euler",
            "--n",
            "3",
            "--d",
            "1",
            "--m",
            "5",
        ],
        &[
            "verify",
            "--identity",
            "sylvester",
            "--nodes",
            "1,8",
            "--d",
            "1",
            "--field",
            "prime",
            "--prime",
            "7",
        ],
        &[
            "campaign",
            "--identity",
            "sylvester",
            "--field",
            "prime",
            "--prime",
            "5",
            "--n-range",
            "2..6",
        ],
        &["campaign", "--identity", "sylvester", "--trials", "0"],
        &["campaign", "--identity", "sylvester", "--n-range", "1..4"],
        &["dilcher-table", "--n-max", "0"],
        &["bench-stability", "--spread-list", "0"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = sylvester(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn prime_mode_rejects_duplicates_after_reduction() {
    let out = sylvester(&[
        "verify",
        "--identity",
        "sylvester",
        "--nodes",
        "1,8,3",
        "--d",
        "2",
        "--field",
        "prime",
        "--prime",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = sylvester(&[
        "verify",
        "--identity",
        "sylvester",
        "--nodes",
        "1,9,3",
        "--d",
        "2",
        "--field",
        "prime",
        "--prime",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn list_identities_names_every_kind() {
    let out = sylvester(&["--list-identities"]);
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<String> = records(&out)
        .into_iter()
        .map(|r| match r {
            OutputRecord::Identity { name, .. } => name,
            other => panic!("{other:?}"),
        })
        .collect();
    for want in [
        "euler",
        "sylvester",
        "extended_euler",
        "f2",
        "dilcher",
        "egf",
        "extended_sylvester",
        "remainder",
    ] {
        assert!(names.iter().any(|n| n == want), "{want}");
    }
}

#[test]
fn report_records_round_trip() {
    let out = sylvester(&[
        "verify",
        "--identity",
        "extended_sylvester",
        "--nodes",
        "1/2,-3,5",
        "--d",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rec = single_report(&out);
    let report = IdentityReport::<Rational>::from_record(&rec, &()).unwrap();
    assert_eq!(report.to_record(), rec);

    let out = sylvester(&[
        "verify",
        "--identity",
        "f2",
        "--n",
        "5",
        "--a",
        "-4",
        "--field",
        "prime",
    ]);
    let rec = single_report(&out);
    let report = IdentityReport::<PrimeField>::from_record(&rec, &PrimeModulus::default()).unwrap();
    assert_eq!(report.to_record(), rec);
    assert_eq!(
        report.rhs.as_scalar(),
        Some(&PrimeField::from_i64(16, &PrimeModulus::default()))
    );
}

#[test]
fn every_emitted_line_reparses_to_the_same_json() {
    for args in [
        &[
            "campaign",
            "--identity",
            "sylvester",
            "--trials",
            "20",
            "--seed",
            "3",
        ][..],
        &["dilcher-table", "--n-max", "4", "--d-max", "3"][..],
        &[
            "bench-stability",
            "--n-list",
            "3,6",
            "--d-list",
            "5,20",
            "--spread-list",
            "1,1e-6",
            "--trials",
            "4",
        ][..],
    ] {
        let out = sylvester(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        for line in text.lines() {
            let rec = OutputRecord::parse_line(line).unwrap();
            assert_eq!(rec.render(sylvester::cli::Format::Json), line);
        }
    }
}

#[test]
fn dilcher_table_harmonic_row() {
    let out = sylvester(&["dilcher-table", "--n-max", "3", "--d-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let cells: Vec<_> = records(&out)
        .into_iter()
        .filter_map(|r| match r {
            OutputRecord::DilcherCell(c) => Some(c),
            _ => None,
        })
        .collect();
    assert_eq!(cells.len(), 6);
    let get = |n, d| cells.iter().find(|c| c.n == n && c.d == d).unwrap();
    assert_eq!(get(2, 1).lhs, "3/2");
    assert_eq!(get(3, 1).lhs, "11/6");
    assert_eq!(get(2, 2).rhs, "7/4");
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "campaign",
        "--identity",
        "extended_euler",
        "--trials",
        "50",
        "--seed",
        "42",
    ];
    let first = sylvester(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, sylvester(&args).stdout);
    let one = sylvester(&[
        "campaign",
        "--identity",
        "sylvester",
        "--trials",
        "1",
        "--seed",
        "9",
    ]);
    let again = sylvester(&[
        "campaign",
        "--identity",
        "sylvester",
        "--trials",
        "1",
        "--seed",
        "9",
    ]);
    assert_eq!(one.stdout, again.stdout);
    let bench = ["bench-stability", "--trials", "3", "--seed", "5"];
    assert_eq!(sylvester(&bench).stdout, sylvester(&bench).stdout);
}

#[test]
fn pretty_output_is_readable() {
    let out = sylvester(&[
        "--pretty",
        "verify",
        "--identity",
        "sylvester",
        "--n",
        "3",
        "--d",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lhs=25") && text.contains("PASS"), "{text}");
}

#[test]
fn help_exits_zero() {
    let out = sylvester(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("campaign"));
}
