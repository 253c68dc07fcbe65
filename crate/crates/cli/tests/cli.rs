//! End-to-end command tests, including golden files for the stable JSON
//! output schema.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let output = Command::new(env!("CARGO_BIN_EXE_hermispec"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&output.stdout).to_string(),
        String::from_utf8_lossy(&output.stderr).to_string(),
        output.status.code(),
    )
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("golden file exists")
}

#[test]
fn spectrum_matches_golden() {
    let (stdout, _, code) = run(&["--json", "spectrum", "C1:12"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("spectrum_c1_12.json"));
}

#[test]
fn charpoly_matches_golden() {
    let (stdout, _, code) = run(&["--json", "charpoly", "C2:4"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("charpoly_c2_4.json"));
}

#[test]
fn dhs_matches_golden() {
    let (stdout, _, code) = run(&["--json", "dhs", "P:8"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("dhs_p8.json"));
}

#[test]
fn usage_errors_exit_two() {
    let (_, stderr, code) = run(&["charpoly", "Q:9"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown graph family"));

    let (_, stderr, code) = run(&["charpoly", "{\"n\":2,\"undirected\":[[1,0]]}"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("u < v"), "diagnostic was: {stderr}");
}

#[test]
fn cospectral_decisions() {
    let (stdout, _, code) = run(&["--json", "cospectral", "P:8", "P:2 + o"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), r#"{"cospectral":true}"#);
    let (stdout, _, _) = run(&["--json", "cospectral", "P:4", "P:5"]);
    assert_eq!(stdout.trim(), r#"{"cospectral":false}"#);
}

#[test]
fn equivalent_distinguishes_cycle_kinds() {
    let (stdout, _, code) = run(&["--json", "equivalent", "C:4", "C2:4"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("\"equivalent\":false"));
}

#[test]
fn out_check_forms() {
    let (stdout, _, _) = run(&["--json", "out-check", "C:6"]);
    assert!(stdout.contains("\"out\":true"));
    let (stdout, _, _) = run(&["--json", "out-check", "C1:8"]);
    assert!(stdout.contains("\"out\":false"));
    let (stdout, _, _) = run(&["--json", "out-check", "theta:2,3,3"]);
    assert!(stdout.contains("\"all_out\":true"));
}

#[test]
fn guided_mates_find_published_lists() {
    let (stdout, _, code) = run(&["mates", "C1:12", "--guided", "--max-order", "12"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("C1:4 + q"), "output: {stdout}");
}

#[test]
fn verify_paper_single_criterion() {
    let (stdout, _, code) = run(&["verify-paper", "1"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("[PASS]"));
    assert!(stdout.contains("1 of 1 criteria passed"));
}

#[test]
fn verify_paper_flags_failed_claim() {
    // The complete-graph family contains a class inside (-2,2); the suite
    // must report it and exit 1.
    let (stdout, _, code) = run(&["verify-paper", "6"]);
    assert_eq!(code, Some(1));
    assert!(stdout.contains("[FAIL]"));
}

#[test]
fn spectrum_is_deterministic() {
    let first = run(&["--json", "spectrum", "Gt:3"]);
    let second = run(&["--json", "spectrum", "Gt:3"]);
    assert_eq!(first.0, second.0);
}
