//! End-to-end tests of the binary: exit codes, output shapes, schema
//! conformance of the JSON formats, and cache behavior.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ramanujan-euler"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

/// Validate a JSON document against one of the shipped schema files.
fn assert_matches_schema(doc: &str, schema_file: &str) {
    let schema_text = std::fs::read_to_string(schema_dir().join(schema_file))
        .unwrap_or_else(|e| panic!("schema {schema_file} must ship with the repo: {e}"));
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let value: serde_json::Value = serde_json::from_str(doc).expect("valid JSON output");
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| format!("{e}"))
        .collect();
    assert!(
        errors.is_empty(),
        "{schema_file} violations: {}",
        errors.join("; ")
    );
}

#[test]
fn classify_unitary_prints_identification() {
    let out = run(&["classify", "--poly", "x^2-2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("UNITARY m=2"), "{text}");
    assert!(text.contains("Z_2"), "{text}");
    assert!(text.contains("meromorphic continuation"), "{text}");
}

#[test]
fn classify_nonunitary_prints_witness_and_boundary() {
    let out = run(&["classify", "--poly", "x-5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("NON-UNITARY witness x0=-2"), "{text}");
    assert!(text.contains("f(x0)=-7"), "{text}");
    assert!(text.contains("natural boundary Re(s)=0"), "{text}");
}

#[test]
fn classify_rejects_bad_input_with_exit_1() {
    for poly in ["2x-1", "7", "x^"] {
        let out = run(&["classify", "--poly", poly]);
        assert_eq!(out.status.code(), Some(1), "poly {poly:?}");
    }
}

#[test]
fn tau_zero_limit_exits_1() {
    let out = run(&["tau", "--limit", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_subcommand_and_flag_exit_1_with_usage() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.to_lowercase().contains("usage"), "{err}");

    let out = run(&["tau", "--limit", "5", "--wat"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tau_csv_has_exact_values() {
    let out = run(&["tau", "--limit", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,tau");
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[1], "1,1");
    assert_eq!(lines[2], "2,-24");
    assert_eq!(lines[10], "10,-115920");
}

#[test]
fn tau_json_matches_schema() {
    let out = run(&["tau", "--limit", "12", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_matches_schema(&text, "tau.schema.json");
    let rows: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(rows[5]["n"], 6);
    assert_eq!(rows[5]["tau"], "-6048");
}

#[test]
fn angles_csv_and_json() {
    let out = run(&["angles", "--limit", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,a,theta");
    assert_eq!(lines.len(), 26); // pi(100) = 25
    assert!(lines[1].starts_with("2,-0.530330085889910"), "{}", lines[1]);

    let out = run(&["angles", "--limit", "100", "--format", "json"]);
    assert_matches_schema(&stdout(&out), "angles.schema.json");
}

#[test]
fn satotate_json_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("hist.svg");
    let out = run(&[
        "satotate",
        "--limit",
        "2000",
        "--bins",
        "10",
        "--format",
        "json",
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_matches_schema(&text, "satotate.schema.json");
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["bins"].as_array().unwrap().len(), 10);
    assert_eq!(report["total"], 303);

    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn lfun_value_matches_rational_oracle() {
    // Truncated zeta at s = 2 over p <= 10: (4/3)(9/8)(25/24)(49/48).
    let out = run(&[
        "lfun", "--spec", "zeta", "--s", "2.0", "--cutoff", "10", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_matches_schema(&text, "lfun.schema.json");
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let re = value["re"].as_f64().unwrap();
    assert!((re - 1225.0 / 768.0).abs() < 1e-12);

    let out = run(&[
        "lfun", "--spec", "sym:2", "--s", "2.0,1.0", "--cutoff", "500",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("re,im,cutoff,sigma,tail_hint\n"), "{text}");

    // Rejected evaluation point.
    let out = run(&["lfun", "--spec", "zeta", "--s", "0.5", "--cutoff", "10"]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown family.
    let out = run(&["lfun", "--spec", "wat:3", "--s", "2.0", "--cutoff", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_prints_pass_table() {
    let out = run(&[
        "verify", "--identity", "all", "--cutoff", "300", "--max-m", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("zeta"), "{text}");
    assert!(text.contains("sym-minus m=4"), "{text}");
    assert!(text.contains("shimura"), "{text}");
    assert!(text.contains("pass"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");

    let out = run(&["verify", "--identity", "nonsense", "--cutoff", "100"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn boundary_csv_json_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("cloud.svg");

    let out = run(&[
        "boundary", "--poly", "x^2-1", "--sign", "-", "--cutoff", "500",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,root_modulus,sigma,t");
    assert_eq!(lines.len(), 1 + 2 * 95); // two roots per prime, pi(500) = 95

    let out = run(&[
        "boundary",
        "--poly",
        "x^2-1",
        "--sign",
        "-",
        "--cutoff",
        "500",
        "--format",
        "json",
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_matches_schema(&stdout(&out), "boundary.schema.json");
    assert!(svg_path.exists());

    let out = run(&[
        "boundary", "--poly", "x^2-1", "--sign", "*", "--cutoff", "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn character_decomposition_and_verdicts() {
    let out = run(&["character", "--poly", "x^3-3x", "--decompose"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("chi_3 - chi_1"));

    let out = run(&["character", "--poly", "x^3-3x", "--unitary"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("UNITARY"));

    let out = run(&["character", "--poly", "x^2+1", "--unitary", "--sign", "+"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("NON-UNITARY"));

    // Default mode prints the decomposition.
    let out = run(&["character", "--poly", "x^4-4x^2+2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("chi_4 - chi_2"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tau.csv");
    let out = run(&["tau", "--limit", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,tau\n1,1\n"));
}

#[test]
fn cache_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = [
        "angles",
        "--limit",
        "200",
        "--cache-dir",
        cache.to_str().unwrap(),
    ];

    let first = run(&args);
    assert!(first.status.success());
    assert!(cache.join("angles-200.csv").exists());
    assert!(cache.join("tau-200.csv").exists());

    // Second run loads the cache and emits identical bytes.
    let second = run(&args);
    assert!(second.status.success());
    assert_eq!(stdout(&first), stdout(&second));

    // Corrupt cache: recompute with a warning, same output, exit 0.
    std::fs::write(cache.join("angles-200.csv"), "p,a,theta\ngarbage").unwrap();
    let third = run(&args);
    assert!(third.status.success());
    assert_eq!(stdout(&first), stdout(&third));
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt"));
}

#[test]
fn cache_dir_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["tau", "--limit", "20"])
        .env("RAMANUJAN_EULER_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("tau-20.csv").exists());
}

#[test]
fn deterministic_across_runs() {
    let a = run(&["lfun", "--spec", "zf:x^2-2:-", "--s", "2.5,0.5", "--cutoff", "2000"]);
    let b = run(&["lfun", "--spec", "zf:x^2-2:-", "--s", "2.5,0.5", "--cutoff", "2000"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}
