//! End-to-end tests of the `hydromoments` binary: exact output bytes,
//! exit codes, and the determinism contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hydromoments"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn moment_plain_output_is_exact() {
    let out = run(&["moment", "--n", "2", "--l", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5 a0\n");

    let out = run(&["moment", "--n", "2", "--l", "1", "--m", "-2"]);
    assert_eq!(stdout(&out), "1/12 a0^-2\n");

    // dimensionless moment prints without a unit
    let out = run(&["moment", "--n", "1", "--l", "0", "--m", "0"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn moment_below_bound_is_a_domain_error() {
    let out = run(&["moment", "--n", "1", "--l", "0", "--m", "-3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    let diagnostic = stderr(&out);
    assert!(
        diagnostic.starts_with("moment does not exist: requires m >= -2l-2"),
        "{diagnostic}"
    );
    assert_eq!(diagnostic.lines().count(), 1, "one-line diagnostic");
}

#[test]
fn invalid_quantum_numbers_exit_2() {
    let out = run(&["moment", "--n", "2", "--l", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["state", "--n", "2", "--l", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["moment", "--n", "0", "--l", "0", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn moment_json_record() {
    let out = run(&[
        "moment", "--n", "2", "--l", "1", "--m", "-2", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["n"].as_u64(), Some(2));
    assert_eq!(parsed["m"].as_i64(), Some(-2));
    assert_eq!(parsed["numerator"].as_str(), Some("1"));
    assert_eq!(parsed["denominator"].as_str(), Some("12"));
    assert_eq!(parsed["unit"].as_str(), Some("a0^-2"));
}

#[test]
fn table_csv_has_one_data_row_per_existing_power() {
    let out = run(&[
        "table", "--n", "2", "--l", "1", "--from", "-4", "--to", "2", "--format", "csv",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,l,m,numerator,denominator,unit");
    assert_eq!(lines.len(), 8, "header plus seven rows:\n{text}");
    assert_eq!(lines[1], "2,1,-4,1,24,a0^-4");
    assert_eq!(lines[3], "2,1,-2,1,12,a0^-2");
}

#[test]
fn table_plain_marks_powers_below_the_bound() {
    let out = run(&["table", "--n", "3", "--l", "0", "--from", "-5", "--to", "0"]);
    assert_eq!(
        stdout(&out),
        "m=-5  nonexistent\n\
         m=-4  nonexistent\n\
         m=-3  nonexistent\n\
         m=-2  2/27 a0^-2\n\
         m=-1  1/9 a0^-1\n\
         m=0  1\n"
    );
}

#[test]
fn table_rejects_inverted_range() {
    let out = run(&["table", "--n", "2", "--l", "1", "--from", "3", "--to", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--from must be <= --to"));
}

#[test]
fn state_plain_dump() {
    let out = run(&["state", "--n", "1", "--l", "0"]);
    assert_eq!(
        stdout(&out),
        "n: 1\n\
         l: 0\n\
         energy: -1/2 e^2/a0\n\
         normsq: 1/4\n\
         oracle factor: 1\n\
         wavefunction: (1) exp(-1 r)\n"
    );

    let out = run(&["state", "--n", "2", "--l", "0"]);
    let text = stdout(&out);
    assert!(text.contains("energy: -1/8 e^2/a0"));
    assert!(text.contains("wavefunction: (-3) exp(-1/2 r) + (3/2) r exp(-1/2 r)"));
}

#[test]
fn state_show_operators_appends_term_records() {
    let out = run(&["state", "--n", "2", "--l", "0", "--show-operators"]);
    let text = stdout(&out);
    assert!(text.contains("hamiltonian:"), "{text}");
    assert!(text.contains("lowering:"), "{text}");
    assert!(text.contains("raising:"), "{text}");

    let out = run(&[
        "state",
        "--n",
        "2",
        "--l",
        "0",
        "--show-operators",
        "--format",
        "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ham = parsed["operators"]["hamiltonian"].as_array().unwrap();
    assert!(ham
        .iter()
        .all(|t| t["coeff"].is_string() && t["power"].is_i64() && t["deriv_order"].is_u64()));

    // without the flag the operators key is absent entirely
    let out = run(&["state", "--n", "2", "--l", "0", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(parsed.get("operators").is_none());
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = run(&["verify", "--nmax", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.ends_with("all 12 identity families passed (31 cells, n <= 1)\n"),
        "{text}"
    );
}

#[test]
fn verify_json_report_parses() {
    let out = run(&["verify", "--nmax", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["n_max"].as_u64(), Some(2));
    let results = parsed["results"].as_array().unwrap();
    assert_eq!(results.len(), 12);
    assert_eq!(results[0]["family"].as_str(), Some("kp_closure"));
    assert!(results
        .iter()
        .all(|r| r["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn verify_rejects_nmax_zero() {
    let out = run(&["verify", "--nmax", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_fault_injection_exits_one() {
    let out = run(&["verify", "--nmax", "2", "--inject-fault", "2,0,3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("kp_closure: FAIL (3 of"), "{text}");
    assert!(text.contains("1 of 12 identity families FAILED"), "{text}");

    // a custom rational delta also works
    let out = run(&["verify", "--nmax", "2", "--inject-fault", "2,0,3,-1/7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_rejects_malformed_fault() {
    for bad in ["2,0", "2,0,x", "2,0,3,0", "2,0,3,1,9"] {
        let out = run(&["verify", "--nmax", "2", "--inject-fault", bad]);
        assert_eq!(out.status.code(), Some(2), "spec {bad:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn format_flag_is_global() {
    // before the subcommand ...
    let a = run(&[
        "--format", "csv", "moment", "--n", "2", "--l", "1", "--m", "1",
    ]);
    // ... and after it
    let b = run(&[
        "moment", "--n", "2", "--l", "1", "--m", "1", "--format", "csv",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(
        stdout(&a),
        "n,l,m,numerator,denominator,unit\n2,1,1,5,1,a0\n"
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec![
            "table", "--n", "4", "--l", "2", "--from", "-6", "--to", "6", "--format", "json",
        ],
        vec!["state", "--n", "3", "--l", "1", "--format", "json"],
        vec!["verify", "--nmax", "2", "--format", "markdown"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
    }
}

#[test]
fn parse_errors_exit_two() {
    let out = run(&["moment", "--n", "2", "--l", "1"]); // missing --m
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["moment", "--n", "two", "--l", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
