//! Process-level contract tests for the `qdeform` binary: exit codes,
//! format parity, and deterministic output.

use std::process::{Command, Output};

fn qdeform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdeform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn exit_zero_on_healthy_identity_suite() {
    // the minimal bound must pass too
    for n_max in ["1", "12"] {
        let out = qdeform(&["identity", "--n-max", n_max]);
        assert_eq!(out.status.code(), Some(0), "n_max {n_max}");
        let text = stdout(&out);
        assert!(text.starts_with("identity,n_max,passed,residual"));
        assert!(text.lines().skip(1).all(|l| l.contains(",true,")));
    }
}

#[test]
fn exit_one_on_injected_identity_fault() {
    let out = qdeform(&[
        "identity",
        "--n-max",
        "12",
        "--inject-fault",
        "basic-number",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let bad: Vec<&str> = text.lines().filter(|l| l.contains(",false,")).collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].starts_with("boson-recursion"));
    assert!(
        !bad[0].ends_with(",0"),
        "failure row must render its residual"
    );
}

#[test]
fn exit_zero_on_healthy_fock_report() {
    for kind_q in [
        ("boson", "2"),
        ("boson-nonsym", "0.5"),
        ("std-fermion", "0.7"),
    ] {
        let out = qdeform(&["fock", "--kind", kind_q.0, "--q", kind_q.1]);
        assert_eq!(out.status.code(), Some(0), "kind {}", kind_q.0);
    }
}

#[test]
fn exit_one_on_injected_fock_fault() {
    let out = qdeform(&[
        "fock",
        "--kind",
        "boson",
        "--q",
        "2",
        "--dim",
        "8",
        "--inject-fault",
        "ladder-entry",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_two_on_domain_errors() {
    // generalized fermions need q < 1
    let out = qdeform(&["fock", "--kind", "gen-fermion", "--q", "2", "--dim", "8"]);
    assert_eq!(out.status.code(), Some(2));
    // standard fermions need dim 2
    let out = qdeform(&["fock", "--kind", "std-fermion", "--q", "0.7", "--dim", "8"]);
    assert_eq!(out.status.code(), Some(2));
    // no closed form for this combination
    let out = qdeform(&[
        "evolve",
        "--model",
        "boson-nonsym",
        "--variant",
        "undeformed",
        "--q",
        "0.5",
        "--compare-paper",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_two_on_bad_flags() {
    let out = qdeform(&["basic", "--kind", "boson-sym"]); // missing --q
    assert_eq!(out.status.code(), Some(2));
    let out = qdeform(&["basic", "--kind", "not-a-kind", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn evolve_exits_one_when_integration_misses_the_oracle() {
    // five giant steps over a fast-rotating system cannot reach 1e-8
    let out = qdeform(&[
        "evolve",
        "--model",
        "boson-sym",
        "--variant",
        "deformed-qinv",
        "--q",
        "2",
        "--dim",
        "8",
        "--t-max",
        "10",
        "--steps",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn evolve_single_step_emits_one_row_per_element() {
    let out = qdeform(&[
        "evolve",
        "--model",
        "boson-sym",
        "--variant",
        "deformed-qinv",
        "--q",
        "1.1",
        "--dim",
        "4",
        "--t-max",
        "0.01",
        "--steps",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3, "dim 4 has three ladder elements");
    // pure phases: the abs column equals the initial magnitudes sqrt([n])
    for (row, n) in rows.iter().zip(1u32..) {
        let abs: f64 = row.split(',').nth(5).unwrap().parse().unwrap();
        let expected = qdeform::qnum::basic_int(qdeform::BasicNumberKind::BosonSymmetric, n)
            .eval(1.1)
            .unwrap()
            .sqrt();
        assert!((abs - expected).abs() < 1e-9, "element {n}");
    }
}

#[test]
fn evolve_reports_the_exact_element_frequency() {
    // element (0, 1) of the symmetric boson under lambda = 1/q at q = 2:
    // E_1 - E_0/2 = 1.75 - 0.25 = 1.5
    let out = qdeform(&[
        "evolve",
        "--model",
        "boson-sym",
        "--variant",
        "deformed-qinv",
        "--q",
        "2",
        "--dim",
        "4",
        "--t-max",
        "0.1",
        "--steps",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let first_element_row = text
        .lines()
        .find(|l| l.split(',').nth(1) == Some("0") && l.split(',').nth(2) == Some("1"))
        .unwrap();
    let freq: f64 = first_element_row
        .split(',')
        .nth(7)
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(freq, 1.5);
}

#[test]
fn basic_row_for_n_max_zero_is_the_zero_bracket() {
    let out = qdeform(&["basic", "--kind", "boson-sym", "--n-max", "0", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("boson-sym,0,0,"));
}

#[test]
fn csv_and_json_carry_identical_values() {
    let args = [
        "evolve",
        "--model",
        "boson-sym",
        "--variant",
        "deformed-qinv",
        "--q",
        "2",
        "--dim",
        "4",
        "--t-max",
        "1",
        "--steps",
        "10",
        "--compare-paper",
    ];
    let csv = stdout(&qdeform(&args));
    let json = stdout(&qdeform(&[&args[..], &["--format", "json"]].concat()));

    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let json_rows = parsed.as_array().unwrap();
    let mut csv_lines = csv.lines();
    let header: Vec<&str> = csv_lines.next().unwrap().split(',').collect();
    let csv_rows: Vec<&str> = csv_lines.collect();
    assert_eq!(csv_rows.len(), json_rows.len());

    for (line, obj) in csv_rows.iter().zip(json_rows) {
        for (field, cell) in header.iter().zip(line.split(',')) {
            let j = &obj[*field];
            if let Some(expected) = j.as_f64() {
                let got: f64 = cell.parse().unwrap();
                assert_eq!(got.to_bits(), expected.to_bits(), "field {field}");
            } else if let Some(expected) = j.as_u64() {
                assert_eq!(cell.parse::<u64>().unwrap(), expected);
            }
        }
    }
}

#[test]
fn output_is_deterministic_and_ordered() {
    let args = [
        "fock", "--kind", "boson", "--q", "0.5", "--q", "2", "--dim", "8",
    ];
    let first = stdout(&qdeform(&args));
    let second = stdout(&qdeform(&args));
    assert_eq!(first, second);
    // q values appear in the given order, three relation rows each
    let lines: Vec<&str> = first.lines().skip(1).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("boson,5.0"));
    assert!(lines[3].starts_with("boson,2.0"));
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = qdeform(&[
        "basic",
        "--kind",
        "fermion",
        "--n-max",
        "2",
        "--q",
        "0.5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.contains("fermion,2,-q + q^-1,"));
    assert!(contents.contains("1.5000000000000000e0"));
}

#[test]
fn limit_scan_shows_second_order_convergence_and_the_alternating_limit() {
    let out = qdeform(&["limit", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let errs: Vec<f64> = text
        .lines()
        .filter(|l| l.starts_with("jd-error"))
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]));
    let limits: Vec<f64> = text
        .lines()
        .filter(|l| l.starts_with("fermion-limit"))
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(limits, vec![0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
}
