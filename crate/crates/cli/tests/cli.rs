//! End-to-end tests of the `conormal` binary.

use std::process::{Command, Output};

fn conormal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conormal"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn records(output: &Output) -> Vec<serde_json::Value> {
    stdout(output)
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is a JSON object"))
        .collect()
}

/// A record without its timing, which is the only field that may vary.
fn without_timing(mut record: serde_json::Value) -> serde_json::Value {
    record.as_object_mut().unwrap().remove("millis");
    record
}

#[test]
fn eval_weight_function() {
    let out = conormal(&["eval", "W", "--k", "1", "--n", "2", "--I", "{1}"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "h*t1 - h*z2\n");
}

#[test]
fn eval_y_as_a_combination() {
    let out = conormal(&[
        "eval",
        "Y",
        "--k",
        "2",
        "--n",
        "4",
        "--I",
        "{2,4}",
        "--as-W-combo",
    ]);
    assert_eq!(
        stdout(&out),
        "2*W{1,2} + W{1,3} + W{1,4} + W{2,3} + W{2,4}\n"
    );
    // The same subset after shell brace expansion.
    let expanded = conormal(&["eval", "Y", "--n", "4", "--I", "2", "4", "--as-W-combo"]);
    assert_eq!(stdout(&expanded), stdout(&out));
}

#[test]
fn eval_classes_and_coefficients() {
    let out = conormal(&["eval", "kappa_prime", "--n", "2", "--I", "{2}"]);
    assert_eq!(stdout(&out), "{1}: h\n{2}: h - z1 + z2\n");
    let out = conormal(&["eval", "c", "--n", "4", "--I", "{2,4}"]);
    assert_eq!(
        stdout(&out),
        "{1,2}: 2\n{1,3}: 1\n{1,4}: 1\n{2,3}: 1\n{2,4}: 1\n"
    );
    let out = conormal(&["eval", "c_prime", "--n", "4", "--I", "{3,4}"]);
    assert_eq!(stdout(&out), "{1,2}: 1\n{2,4}: -1\n{3,4}: 1\n");
}

#[test]
fn malformed_subsets_are_usage_errors() {
    for subset in ["{1,5}", "{2,2}", "{a}", "{0}"] {
        let out = conormal(&["eval", "W", "--n", "3", "--I", subset]);
        assert_eq!(out.status.code(), Some(2), "--I {subset}");
        assert!(out.stdout.is_empty());
    }
    let out = conormal(&["eval", "W", "--k", "2", "--n", "3", "--I", "{1}"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_emits_one_json_record_per_instance() {
    let out = conormal(&[
        "check",
        "orthogonality-tgr",
        "--n-max",
        "3",
        "--format",
        "json-lines",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = records(&out);
    // 0 <= k <= n <= 3.
    assert_eq!(records.len(), 10);
    for r in &records {
        assert_eq!(r["check"], "orthogonality-tgr");
        assert_eq!(r["status"], "pass");
        assert!(r["k"].as_u64().unwrap() <= r["n"].as_u64().unwrap());
        assert!(r["millis"].is_u64());
        assert!(r.get("witness").is_none());
    }
}

#[test]
fn check_is_deterministic() {
    let args = [
        "check",
        "leading",
        "free-basis",
        "--n-max",
        "3",
        "--format",
        "json-lines",
    ];
    let first: Vec<_> = records(&conormal(&args))
        .into_iter()
        .map(without_timing)
        .collect();
    let second: Vec<_> = records(&conormal(&args))
        .into_iter()
        .map(without_timing)
        .collect();
    assert!(!first.is_empty());
    assert_eq!(first, second);
}

#[test]
fn an_injected_sign_fault_fails_with_a_witness() {
    let out = conormal(&[
        "check",
        "orthogonality-tgr",
        "--k",
        "1",
        "--n",
        "3",
        "--inject-sign-fault",
        "--format",
        "json-lines",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let records = records(&out);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["status"], "fail");
    let witness = &records[0]["witness"];
    assert!(!witness["subsets"].as_array().unwrap().is_empty());
    assert!(witness["expected"].is_string() && witness["actual"].is_string());

    let named = conormal(&[
        "check",
        "leading",
        "--k",
        "2",
        "--n",
        "4",
        "--inject-sign-fault={2,4}",
    ]);
    assert_eq!(named.status.code(), Some(1));
    assert!(stdout(&named).starts_with("FAIL leading k=2 n=4"));
}

#[test]
fn an_empty_selection_succeeds_silently() {
    let out = conormal(&["check", "--n-max", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn unaffordable_instances_are_reported_as_skipped() {
    let out = conormal(&[
        "check",
        "y-consistency",
        "--k",
        "5",
        "--n",
        "5",
        "--format",
        "json-lines",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = records(&out);
    assert_eq!(records[0]["status"], "skip");
    assert!(records[0]["reason"].is_string());
}

#[test]
fn seeded_self_test_runs_before_the_suites() {
    let out = conormal(&["check", "interpolation", "--n-max", "2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS core-arithmetic"));
}

#[test]
fn unknown_suites_are_usage_errors() {
    let out = conormal(&["check", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_suite_passes_up_to_four_points() {
    let out = conormal(&["check", "all", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().all(|line| line.starts_with("PASS")), "{text}");
    for suite in [
        "interpolation",
        "free-basis",
        "rmatrix",
        "y-consistency",
        "pushforward",
        "leading",
        "orthogonality-gr",
        "orthogonality-tgr",
        "kappa-triangularity",
        "rmatrix-cohomology",
    ] {
        assert!(
            text.lines()
                .any(|line| line.split(' ').nth(1) == Some(suite)),
            "{suite} missing"
        );
    }
}
