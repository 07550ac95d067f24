//! End-to-end tests of the `centset` binary: file round-trips, exit codes,
//! determinism of rendered reports.

use std::path::Path;
use std::process::{Command, Output};

fn centset(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centset"))
        .args(args)
        .current_dir(dir)
        .env_remove("CENTSET_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_analyze_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let out = centset(&["build", "family", "dihedral", "n=8", "--out", "d16.json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let first = centset(&["analyze", "d16.json", "--json"], dir.path());
    assert!(first.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["order"], 16);
    assert_eq!(report["centCount"], 6);
    assert_eq!(report["isCG"], true);

    // rebuild from the emitted table form: the report must be identical
    let rebuilt = centset(&["build", "file", "d16.json", "--out", "d16b.json"], dir.path());
    assert!(rebuilt.status.success());
    let second = centset(&["analyze", "d16b.json", "--json"], dir.path());
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn build_perm_closure() {
    let dir = tempfile::tempdir().unwrap();
    let out = centset(
        &["build", "perm", "--degree", "4", "--gens", "(0 1 2 3),(0 1)", "--out", "s4.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let analyzed = centset(&["analyze", "s4.json", "--json"], dir.path());
    let report: serde_json::Value = serde_json::from_str(&stdout(&analyzed)).unwrap();
    assert_eq!(report["order"], 24);
    assert_eq!(report["centCount"], 14);
    assert_eq!(report["isCA"], false);
}

#[test]
fn build_family_pgl_and_cent() {
    let dir = tempfile::tempdir().unwrap();
    let out = centset(&["build", "family", "pgl2", "p=5", "k=1", "--out", "pgl25.json"], dir.path());
    assert!(out.status.success());
    let cent = centset(&["cent", "pgl25.json", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&cent)).unwrap();
    assert_eq!(v["count"], 57);
    // sorted by (order, mask): the full group C(identity) comes last
    let last = v["centralizers"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["order"], 120);
    assert_eq!(last["witness"], 0);
}

#[test]
fn claims_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = centset(&["claims", "run", "--filter", "EX1"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    // the SL(2,3) claim is refuted by enumeration: exit code 2
    let refuted = centset(&["claims", "run", "--filter", "EX22-q3"], dir.path());
    assert_eq!(refuted.status.code(), Some(2));
    assert!(stdout(&refuted).contains("Refuted"));
}

#[test]
fn claims_list_and_csv_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let list = centset(&["claims", "list", "--filter", "EX25*"], dir.path());
    assert_eq!(stdout(&list).lines().count(), 5);

    let a = centset(&["claims", "run", "--filter", "EX25*", "--format", "csv"], dir.path());
    let b = centset(
        &["claims", "run", "--filter", "EX25*", "--format", "csv", "--jobs", "4"],
        dir.path(),
    );
    assert_eq!(stdout(&a), stdout(&b), "csv output is byte-identical across runs and job counts");
    assert!(stdout(&a).starts_with("id,anchor,expected,computed,status,runtimeMs\n"));
    assert_eq!(stdout(&a).lines().count(), 6);
}

#[test]
fn scan_predicates() {
    let dir = tempfile::tempdir().unwrap();
    let cg = stdout(&centset(
        &["scan", "--max-order", "24", "--predicate", "cg"],
        dir.path(),
    ));
    for name in ["S3", "D8", "Q8", "A4", "D12"] {
        assert!(cg.lines().any(|l| l.starts_with(name)), "missing {name} in:\n{cg}");
    }
    // every non-abelian group of order <= 8 is CG, so not-cg rows are abelian
    let notcg = stdout(&centset(
        &["scan", "--max-order", "8", "--predicate", "not-cg"],
        dir.path(),
    ));
    for name in ["S3", "D8", "Q8"] {
        assert!(!notcg.lines().any(|l| l.starts_with(&format!("{name} "))), "{name} in:\n{notcg}");
    }
    assert!(notcg.lines().any(|l| l.starts_with("C8")));

    let frob = stdout(&centset(
        &["scan", "--max-order", "60", "--predicate", "frobenius", "--format", "csv"],
        dir.path(),
    ));
    for order in [",6,", ",12,", ",20,", ",21,", ",42,", ",55,"] {
        assert!(frob.lines().any(|l| l.contains(order)), "missing {order} in:\n{frob}");
    }
}

#[test]
fn isoclinic_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    centset(&["build", "family", "heisenberg", "p=3", "--out", "h27.json"], dir.path());
    centset(&["build", "family", "symmetric", "n=3", "--out", "s3.json"], dir.path());
    let not = centset(&["isoclinic", "h27.json", "s3.json"], dir.path());
    assert!(stdout(&not).contains("NOT isoclinic"));
    assert!(stdout(&not).contains("9 != 6"));

    centset(&["build", "family", "dihedral", "n=4", "--out", "d8.json"], dir.path());
    centset(&["build", "family", "generalized_quaternion", "m=2", "--out", "q8.json"], dir.path());
    let yes = centset(&["isoclinic", "d8.json", "q8.json", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&yes)).unwrap();
    assert_eq!(v["isoclinic"], true);
    assert_eq!(v["certificate"]["verified"], true);

    let same = centset(&["isoclinic", "d8.json", "d8.json"], dir.path());
    assert!(stdout(&same).contains("ISOCLINIC"));
}

#[test]
fn frobenius_command() {
    let dir = tempfile::tempdir().unwrap();
    centset(&["build", "family", "frobenius_metacyclic", "p=7", "q=3", "--out", "f21.json"], dir.path());
    let out = centset(&["frobenius", "f21.json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kernel"]["order"], 7);
    assert_eq!(v["complement"]["order"], 3);
    assert_eq!(v["minimal"], true);

    centset(&["build", "family", "generalized_quaternion", "m=2", "--out", "q8.json"], dir.path());
    let not = centset(&["frobenius", "q8.json"], dir.path());
    assert_eq!(stdout(&not).trim(), "not Frobenius");
}

#[test]
fn order_cap_env_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let capped = Command::new(env!("CARGO_BIN_EXE_centset"))
        .args(["build", "family", "symmetric", "n=4"])
        .current_dir(dir.path())
        .env("CENTSET_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("order cap"));

    let missing = centset(&["analyze", "no-such-file.json"], dir.path());
    assert_eq!(missing.status.code(), Some(1));

    let badfam = centset(&["build", "family", "no_such_family", "n=3"], dir.path());
    assert_eq!(badfam.status.code(), Some(1));
}
