//! End-to-end tests of the smotzkin binary: emission formats, exit codes,
//! determinism, and the b-file diff behaviors.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use num_bigint::BigInt;
use num_traits::One;

fn smotzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smotzkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

#[test]
fn table_family_a_csv() {
    let out = smotzkin(&["table", "--family", "a", "--n-max", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,count");
    assert!(lines.contains(&"3,0,1"), "{text}");
    assert!(lines.contains(&"2,1,1"), "{text}");
}

#[test]
fn table_family_b_json() {
    let out = smotzkin(&["table", "--family", "b", "--n-max", "4", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let expect = serde_json::json!({"n": 4, "k": 0, "count": "2"});
    assert!(
        rows.as_array().unwrap().contains(&expect),
        "rows: {rows}"
    );
}

#[test]
fn table_family_d_csv() {
    let out = smotzkin(&["table", "--family", "d", "--n-max", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.contains(&"2,0,1"), "{text}");
    assert!(lines.contains(&"3,1,2"), "{text}");
}

#[test]
fn table_rejects_unknown_family() {
    let out = smotzkin(&["table", "--family", "x", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_and_json_carry_the_same_rows() {
    let csv = smotzkin(&["table", "--family", "c", "--n-max", "9"]);
    let json = smotzkin(&["table", "--family", "c", "--n-max", "9", "--format", "json"]);
    let mut from_csv = BTreeSet::new();
    for line in stdout(&csv).lines().skip(1) {
        let mut parts = line.split(',');
        from_csv.insert((
            parts.next().unwrap().to_string(),
            parts.next().unwrap().to_string(),
            parts.next().unwrap().to_string(),
        ));
    }
    let rows: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let mut from_json = BTreeSet::new();
    for row in rows.as_array().unwrap() {
        from_json.insert((
            row["n"].to_string(),
            row["k"].to_string(),
            row["count"].as_str().unwrap().to_string(),
        ));
    }
    assert_eq!(from_csv, from_json);
}

#[test]
fn output_is_deterministic() {
    let first = smotzkin(&["table", "--family", "a", "--n-max", "12", "--format", "json"]);
    let second = smotzkin(&["table", "--family", "a", "--n-max", "12", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn series_t_coefficients() {
    let out = smotzkin(&["series", "t", "--order", "4"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, vec!["exponent,coefficient", "1,1", "2,2", "3,7", "4,30"]);
}

#[test]
fn series_f0_coefficients() {
    let out = smotzkin(&["series", "f", "--k", "0", "--order", "9"]);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, vec!["exponent,coefficient", "0,1", "3,1", "6,3", "9,12"]);
}

#[test]
fn series_psi0_coefficients() {
    let out = smotzkin(&["series", "psi", "--k", "0", "--order", "8", "--format", "json"]);
    let terms: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let expect = serde_json::json!([
        {"exponent": 2, "coefficient": "1"},
        {"exponent": 5, "coefficient": "3"},
        {"exponent": 8, "coefficient": "12"},
    ]);
    assert_eq!(terms, expect);
}

#[test]
fn crosscheck_passes_and_reports_groups() {
    let out = smotzkin(&["crosscheck", "--n-max", "20", "--oracle-bound", "8"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let groups = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(groups >= 6, "only {groups} groups in:\n{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn crosscheck_trivial_bound_passes() {
    let out = smotzkin(&["crosscheck", "--n-max", "0", "--oracle-bound", "0"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
}

#[test]
fn crosscheck_detects_injected_fault() {
    let out = smotzkin(&[
        "crosscheck",
        "--n-max",
        "10",
        "--oracle-bound",
        "6",
        "--inject-fault",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let all = format!("{}{}", stdout(&out), stderr(&out));
    assert!(all.contains("(2,1)"), "fault location not named:\n{all}");
}

#[test]
fn crosscheck_rejects_oversized_oracle_bound() {
    let out = smotzkin(&["crosscheck", "--oracle-bound", "17"]);
    assert_eq!(out.status.code(), Some(2));
}

/// First ternary numbers, frozen from the published sequence.
const TERNARY_HEAD: [u64; 11] =
    [1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715];

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Ternary numbers by a factorial route independent of the library:
/// (3m)! / (m! (2m+1)!).
fn ternary_reference(m: u64) -> BigInt {
    factorial(3 * m) / (factorial(m) * factorial(2 * m + 1))
}

fn write_bfile(dir: &Path, terms: usize) {
    let mut lines = String::from("# ternary numbers\n");
    for m in 0..terms as u64 {
        lines.push_str(&format!("{m} {}\n", ternary_reference(m)));
    }
    std::fs::write(dir.join("b001764.txt"), lines).unwrap();
}

#[test]
fn ternary_reference_matches_frozen_head() {
    for (m, want) in TERNARY_HEAD.iter().enumerate() {
        assert_eq!(ternary_reference(m as u64), BigInt::from(*want));
    }
}

#[test]
fn oeis_diff_agrees_with_cached_bfile() {
    let dir = tempfile::tempdir().unwrap();
    write_bfile(dir.path(), 26);
    let out = smotzkin(&[
        "oeis-diff",
        "--seq-id",
        "A001764",
        "--n-max",
        "20",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("full agreement"));
}

#[test]
fn oeis_diff_missing_cache_exits_cache_miss() {
    let dir = tempfile::tempdir().unwrap();
    let out = smotzkin(&[
        "oeis-diff",
        "--n-max",
        "5",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("--allow-fetch"));
}

#[test]
fn oeis_diff_malformed_bfile_exits_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b001764.txt"), "0 1\n1 1\n2\n").unwrap();
    let out = smotzkin(&[
        "oeis-diff",
        "--n-max",
        "2",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("line 3"), "stderr: {}", stderr(&out));
}

#[test]
fn oeis_diff_truncated_bfile_exits_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    write_bfile(dir.path(), 4);
    let out = smotzkin(&[
        "oeis-diff",
        "--n-max",
        "10",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("index 4"), "stderr: {}", stderr(&out));
}

#[test]
fn oeis_diff_reports_first_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let mut lines = String::new();
    for m in 0..6u64 {
        let v = if m == 4 { BigInt::from(56) } else { ternary_reference(m) };
        lines.push_str(&format!("{m} {v}\n"));
    }
    std::fs::write(dir.path().join("b001764.txt"), lines).unwrap();
    let out = smotzkin(&[
        "oeis-diff",
        "--n-max",
        "5",
        "--cache-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("m=4"), "stderr: {}", stderr(&out));
}
