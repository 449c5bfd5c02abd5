use std::path::Path;
use std::process::{Command, Output};

use drg_entangle::entangle::{binary_entropy, entropy_limit};
use drg_entangle::hadamard::{verify, SignMatrix};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drg-entangle")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn spectrum_pairs(v: &Value) -> Vec<(f64, u64)> {
    v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["value"].as_f64().unwrap(), s["mult"].as_u64().unwrap()))
        .collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_matrix_file_that_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h4.json");
    let o = run(&["gen", "--construction", "sylvester", "--k", "2", "--out", path_str(&file)]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let m = SignMatrix::from_json(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(m.order(), 4);

    let o = run(&["verify", "--construction", "file", "--input", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["intersection_array"], "{4,3,2,1;1,2,3,4}");
}

#[test]
fn corrupted_matrix_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let good = stdout(&run(&["gen", "--construction", "sylvester", "--k", "2"]));
    let mut rows = SignMatrix::from_json(&good).unwrap().rows();
    rows[2][1] = -rows[2][1];
    let bad = SignMatrix::from_rows(&rows).unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, bad.to_json()).unwrap();
    let o = run(&["verify", "--construction", "file", "--input", path_str(&file)]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["hadamard"], false);
}

#[test]
fn paley_generation_and_rejection() {
    let o = run(&["gen", "--construction", "paley", "--q", "7"]);
    assert!(o.status.success());
    let m = SignMatrix::from_json(&stdout(&o)).unwrap();
    assert_eq!(m.order(), 8);
    assert!(verify(&m).is_hadamard);

    let o = run(&["gen", "--construction", "paley", "--q", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3 mod 4"));
}

#[test]
fn verify_eight_cycle() {
    let o = run(&["verify", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["intersection_array"], "{2,1,1,1;1,1,1,2}");
}

#[test]
fn invalid_arguments_exit_two() {
    assert_eq!(run(&["spectrum", "--k", "5", "--ell", "1", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["heun", "--k", "4", "--ell", "1", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--k", "1", "--ell", "1", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--k", "1", "--ell", "1", "--n", "4", "--tol", "-1"]).status.code(), Some(2));
}

#[test]
fn spectrum_two_two_multiplicities() {
    let o = run(&["spectrum", "--k", "2", "--ell", "2", "--n", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let pairs = spectrum_pairs(&v);
    let mult = |x: f64| pairs.iter().find(|p| (p.0 - x).abs() < 1e-9).map(|p| p.1);
    assert_eq!(mult(0.0), Some(17));
    assert_eq!(mult(0.25), Some(15));
    assert_eq!(mult(1.0), Some(30));
    assert_eq!(pairs.len(), 5);
    assert_eq!(v["trace_exact"], "2209/64");
    assert_eq!(v["commutator_exact_zero"], true);
    assert!(!v["closed_form_flags"].as_array().unwrap().is_empty());
}

#[test]
fn spectrum_rank_one_and_identity_cases() {
    let v = json(&run(&["spectrum", "--k", "3", "--ell", "3", "--n", "4"]));
    let pairs = spectrum_pairs(&v);
    assert_eq!(pairs.len(), 3);
    assert!(pairs[0].0.abs() < 1e-12 && pairs[0].1 == 1);
    assert!((pairs[1].0 - 1.0 / 16.0).abs() < 1e-12 && pairs[1].1 == 1);
    assert!((pairs[2].0 - 1.0).abs() < 1e-12 && pairs[2].1 == 14);

    let v = json(&run(&["spectrum", "--k", "4", "--ell", "4", "--n", "4"]));
    let pairs = spectrum_pairs(&v);
    assert_eq!(pairs.len(), 1);
    assert!((pairs[0].0 - 1.0).abs() < 1e-12 && pairs[0].1 == 16);
    assert_eq!(v["commutator_exact_zero"], Value::Null);
}

#[test]
fn spectrum_csv_and_pretty() {
    let o = run(&["spectrum", "--k", "1", "--ell", "3", "--n", "4", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("value,mult"));
    assert!(text.contains("\n0.6875,1\n"), "{text}");
    let o = run(&["spectrum", "--k", "1", "--ell", "3", "--n", "4", "--format", "pretty"]);
    assert!(stdout(&o).contains("trace = 75/16"));
}

fn entropy_table(args: &[&str]) -> Vec<Vec<f64>> {
    let o = run(args);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,K,ell,S,S/n,S*4n/ln(n),S-limit,S/n-limit,S*4n/ln(n)-1")
    );
    lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect()
}

#[test]
fn entropy_sweep_matches_binary_entropy() {
    let rows = entropy_table(&["entropy", "--n", "4,16,64", "--k", "1", "--ell", "3"]);
    assert_eq!(rows.len(), 3);
    for r in rows {
        let n = r[0];
        assert!((r[3] - binary_entropy((3.0 * n - 1.0) / (4.0 * n))).abs() < 1e-9);
        assert!((r[6] - (r[3] - entropy_limit())).abs() < 1e-12);
    }
}

#[test]
fn entropy_sweep_trends() {
    let rows = entropy_table(&["entropy", "--n", "8,16,32,64", "--k", "1,3", "--ell", "1,3"]);
    let column = |k: f64, ell: f64, c: usize| -> Vec<f64> {
        rows.iter().filter(|r| r[1] == k && r[2] == ell).map(|r| r[c]).collect()
    };
    // S_{1,1}/n decreases toward the limit from above
    let per_n = column(1.0, 1.0, 4);
    assert!(per_n.windows(2).all(|w| w[1] < w[0]));
    assert!(per_n.iter().all(|&v| v > entropy_limit()));
    // S_{3,3}·4n/ln n decreases toward 1
    let scaled = column(3.0, 3.0, 5);
    assert!(scaled.windows(2).all(|w| w[1] < w[0] && w[1] > 1.0));
}

#[test]
fn heun_report_formats() {
    let v = json(&run(&["heun", "--k", "2", "--ell", "2", "--n", "4"]));
    assert_eq!(v["mu"], "2");
    assert_eq!(v["commutation"]["chopped"], true);
    assert_eq!(v["expansions_match"], true);
    let o = run(&["heun", "--k", "2", "--ell", "2", "--n", "8", "--format", "pretty"]);
    let text = stdout(&o);
    assert!(text.contains("μ = 0+1*sqrt(8)"), "{text}");
    assert!(text.contains("[T, Π] = 0: true"));
}
