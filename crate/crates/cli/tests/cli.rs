use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jostzeta"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn zeros_hundred_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("zeros.csv");
    let o = run(&["zeros", "--v", "2", "--n-max", "100", "--out", s(&out)]);
    assert!(o.status.success());
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(stderr.contains("\"normalize_at\":9880"), "{stderr}");
    let rows = jostzeta::io::read_csv_file(&out).unwrap();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r.residual <= 1e-12 && r.t_true.is_none()));
}

#[test]
fn exit_codes() {
    let o = run(&["zeros", "--v", "0", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no zeros for free particle"));
    assert_eq!(run(&["zeros", "--n-max", "0"]).status.code(), Some(1));
    assert_eq!(run(&["zeros", "--threads", "zero"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let o = run(&["figure1", "--n-max", "10", "--zeta-file", "/definitely/missing.txt"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("file not found"));
}

#[test]
fn figure1_tiny_run_is_complete() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (dir.path().join("a.csv"), dir.path().join("b.csv"), dir.path().join("c.csv"));
    let o = run(&["figure1", "--n-max", "10", "--out", s(&a), s(&b), s(&c)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let fa = std::fs::read_to_string(&a).unwrap();
    let fb = std::fs::read_to_string(&b).unwrap();
    assert!(fa.starts_with("n,t_hat,t_asym,t_true\n1,"));
    assert!(fb.starts_with("n,p_hat,p_asym,p_true\n1,"));
    assert_eq!(fa.lines().count(), 11);
    assert!(fb.lines().skip(1).all(|l| l.split(',').all(|f| !f.is_empty())));
    // 2πn/ln n is undefined at n = 1 only
    assert!(fa.lines().skip(2).all(|l| l.split(',').all(|f| !f.is_empty())));
    let rows = jostzeta::io::read_csv_file(&c).unwrap();
    assert!(rows.iter().all(|r| r.ratio_t.is_some() && r.ratio_p.is_some()));
}

#[test]
fn zeros_with_reference_files() {
    let o = run(&[
        "zeros",
        "--n-max",
        "20",
        "--zeta-file",
        s(&fixture("zeros_first100.txt")),
        "--prime-file",
        s(&fixture("primes_first10000.txt")),
    ]);
    assert!(o.status.success());
    let rows = jostzeta::io::read_csv(o.stdout.as_slice()).unwrap();
    assert!((rows[0].t_true.unwrap() - 14.134_725_142).abs() < 1e-9);
    assert_eq!(rows[19].p_true, Some(71.0));
}

#[test]
fn normalize_reports_reference_factors() {
    let o = run(&["normalize", "--zeta-file", s(&fixture("zeros_9871_9890.txt"))]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["Nz"].as_f64().unwrap() - 1.071).abs() <= 0.005);
    assert!((v["Np"].as_f64().unwrap() - 0.978).abs() <= 0.005);
    assert_eq!(v["small_n_caveat"], false);
    let o = run(&["normalize", "--normalize-at", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["small_n_caveat"], true);
    assert!(v["Nz"].as_f64().unwrap().is_finite());
}

#[test]
fn seed_only_skips_newton() {
    let o = run(&["zeros", "--n-max", "3", "--seed-only"]);
    let rows = jostzeta::io::read_csv(o.stdout.as_slice()).unwrap();
    assert!((rows[0].re_beta - 2.666_896_013_84).abs() < 1e-10);
    assert!(rows[0].residual > 1e-3);
}

#[test]
fn cache_reload_is_bit_exact_and_corruption_located() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cat.json");
    let (x, y) = (dir.path().join("x.csv"), dir.path().join("y.csv"));
    assert!(run(&["zeros", "--n-max", "100", "--cache", s(&cache), "--out", s(&x)]).status.success());
    assert!(run(&["zeros", "--n-max", "100", "--cache", s(&cache), "--out", s(&y)]).status.success());
    assert_eq!(std::fs::read(&x).unwrap(), std::fs::read(&y).unwrap());
    let o = run(&["validate", "--n-max", "100", "--cache", s(&cache)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));

    let text = std::fs::read_to_string(&cache).unwrap().replacen("\"n\": 7", "\"n\": 8", 1);
    std::fs::write(&cache, text).unwrap();
    let o = run(&["validate", "--n-max", "100", "--cache", s(&cache)]);
    assert_eq!(o.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let check = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "catalog_cache")
        .unwrap();
    assert!(check["detail"].as_str().unwrap().contains("entry 7"), "{check}");
}

#[test]
fn loose_tolerance_warns_but_passes() {
    let o = run(&["validate", "--n-max", "200", "--tol", "1e-1"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning: --tol"));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);
}
