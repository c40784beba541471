use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbzeta")).args(args).arg("--out").arg(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn help_documents_every_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_mbzeta")).arg("--help").output().unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    for code in 1..=6 {
        assert!(text.contains(&format!("  {code}  ")), "exit code {code} missing from help");
    }
}

#[test]
fn census_is_idempotent_and_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["census", "--function", "beta", "--t-max", "30", "--threads", "1"], dir.path());
    assert!(a.status.success());
    let first = std::fs::read(dir.path().join("beta.catalog")).unwrap();
    let b = run(&["census", "--function", "beta", "--t-max", "30", "--threads", "3"], dir.path());
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(std::fs::read(dir.path().join("beta.catalog")).unwrap(), first);
}

#[test]
fn empty_census_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["census", "--function", "zeta", "--t-max", "10"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("# 0 zeros"));
    assert!(!dir.path().join("zeta.catalog").exists());
}

#[test]
fn bad_configuration_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["census", "--a", "1.5"], dir.path()).status.code(), Some(1));
    assert_eq!(run(&["census", "--t-max", "500"], dir.path()).status.code(), Some(1));
    assert_eq!(run(&["census", "--threads", "0"], dir.path()).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], dir.path()).status.code(), Some(1));
}

#[test]
fn unreachable_guess_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["census", "--function", "beta", "--t-max", "17"], dir.path()).status.success());
    let o = run(&["filter-roots", "--function", "beta", "--guess", "1"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("left the basin"));
    let csv = std::fs::read_to_string(dir.path().join("filter_roots_beta.csv")).unwrap();
    assert!(csv.lines().any(|l| l == "seed,e_root,ordinate,gap,iterations,precision"));
}

#[test]
fn audit_without_catalog_exits_4_with_hint() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["audit"], dir.path());
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("mbzeta census"));
}

#[test]
fn audit_claim_filter() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["census", "--t-max", "60"], dir.path()).status.success());
    let o = run(&["audit", "--claims", "contour_shift"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("ledger.json")).unwrap()).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 1);
    assert_eq!(claims[0]["claim_id"], "contour_shift");
    assert_eq!(run(&["audit", "--claims", "nonsense"], dir.path()).status.code(), Some(1));
}

#[test]
fn tampered_catalog_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["census", "--function", "beta", "--t-max", "17"], dir.path()).status.success());
    let path = dir.path().join("beta.catalog");
    assert!(run(&["cache", "verify", "--function", "beta"], dir.path()).status.success());
    let text = std::fs::read_to_string(&path).unwrap().replacen("6.02", "6.03", 1);
    std::fs::write(&path, text).unwrap();
    assert_eq!(run(&["cache", "verify", "--function", "beta"], dir.path()).status.code(), Some(5));
    assert_eq!(run(&["cache", "verify", "--function", "zeta"], dir.path()).status.code(), Some(4));
}

#[test]
fn stats_writes_tables_and_scripts() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["census", "--t-max", "200"], dir.path()).status.success());
    let o = run(&["stats"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    for f in ["spacings.csv", "pair_correlation.csv", "spacing.gp", "spacing_hist.dat", "pair_correlation.gp", "pair_correlation.dat"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let csv = std::fs::read_to_string(dir.path().join("spacings.csv")).unwrap();
    assert!(csv.starts_with("# "));
}
