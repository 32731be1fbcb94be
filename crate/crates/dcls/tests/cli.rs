//! End-to-end checks of the installed binary: exit codes, stdout schema,
//! and the stderr config echo.

use std::process::{Command, Output};

fn dcls(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcls")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn complete_emits_a_verifiable_certificate() {
    let out = dcls(&["complete", "--p", "11", "--jce", "6,2,4", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stderr(&out).starts_with("# dcls complete"), "config echo goes to stderr");
    let body = stdout(&out);
    let line = body.lines().next().expect("one JSON line");
    let cert: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
    assert_eq!(cert["version"], 1);
    assert_eq!(cert["p"], 11);
    assert_eq!(cert["method"]["kind"], "trade");
    // (6,2,4) is already in normal position, so the back map is trivial
    // and the certificate row is the answer itself
    assert_eq!(cert["first_row"], "064728135a9");
    assert_eq!(cert["normal_form"]["back"]["scale"], 1);
}

#[test]
fn complete_grid_prints_the_full_square() {
    let out = dcls(&["complete", "--p", "11", "--transversals", "(0,0);(1,6);(2,4)", "--grid"]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    let grid: Vec<&str> = body
        .lines()
        .filter(|l| !l.is_empty() && l.chars().all(|ch| ch.is_ascii_digit() || ch == ' '))
        .collect();
    assert_eq!(grid.len(), 11, "expected an 11-row grid, got:\n{body}");
}

#[test]
fn verify_accepts_the_traded_row_and_its_prescription() {
    let out = dcls(&["verify", "--p", "11", "--row", "064728135a9", "--jce", "6,2,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("valid first row of order 11"));
}

#[test]
fn verify_rejects_a_corrupted_row_with_exit_one() {
    // symbol 8 repeated, 9 missing
    let out = dcls(&["verify", "--p", "11", "--row", "064728135a8", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(v["kind"], "verify");
    assert_eq!(v["ok"], false);
    assert!(v["reason"].as_str().unwrap().contains("repeats"));
}

#[test]
fn verify_rejects_a_row_that_misses_its_prescription() {
    // valid row, but column 2 holds 1, not 4
    let out = dcls(&["verify", "--p", "11", "--row", "061728394a5", "--jce", "6,2,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("expected e = 4"));
}

#[test]
fn inadmissible_input_is_a_usage_error() {
    let out = dcls(&["charsum", "--p", "11", "--jce", "1,2,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn exception_counts_match_the_published_census() {
    let out = dcls(&["exceptions", "--p", "11", "--jobs", "1", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(v["kind"], "exception_count");
    assert_eq!(v["p"], 11);
    assert_eq!(v["count"], 180);
}

#[test]
fn builtin_corpus_checks_clean() {
    let out = dcls(&["corpus"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: corpus OK"));
}

#[test]
fn usage_errors_and_help_use_standard_exit_codes() {
    assert_eq!(dcls(&["--help"]).status.code(), Some(0));
    assert_eq!(dcls(&["--version"]).status.code(), Some(0));
    // complete requires exactly one of --jce / --transversals
    assert_eq!(dcls(&["complete", "--p", "11"]).status.code(), Some(2));
    assert_eq!(dcls(&["no-such-command"]).status.code(), Some(2));
}
