// SPDX-License-Identifier: Apache-2.0

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn boolobs(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolobs"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn kernel_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = boolobs(dir.path(), &["kernel", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"]["dimension"], 4);
    assert_eq!(v["result"]["basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["config"]["dense_cap"], 14);
    assert!(dir.path().join("kernel.json").exists());
}

#[test]
fn spectrum_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&boolobs(
        dir.path(),
        &["spectrum", "--n", "3", "--format", "json"],
    ));
    assert_eq!(
        v["result"]["pairs"],
        serde_json::json!([[3, 1], [1, 3], [-1, 3], [-3, 1]])
    );
    let o = boolobs(dir.path(), &["spectrum", "--n", "3", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text, "eigenvalue,multiplicity\n3,1\n1,3\n-1,3\n-3,1\n");
    assert!(!text.contains('\r'));
}

#[test]
fn euler_degree_one() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&boolobs(
        dir.path(),
        &["euler", "--character", "delta", "--degree", "1"],
    ));
    assert_eq!(
        v["result"]["dirichlet_coefficients"],
        serde_json::json!([1, 2])
    );
    assert_eq!(v["result"]["euler_coefficients"], serde_json::json!([1, 2]));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(boolobs(dir.path(), &["kernel"]).status.code(), Some(1));
    assert_eq!(
        boolobs(dir.path(), &["kernel", "--n", "3", "--wat"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        boolobs(dir.path(), &["kernel", "--n", "20"]).status.code(),
        Some(2)
    );
    assert_eq!(
        boolobs(dir.path(), &["kernel", "--n", "9", "--arity-cap", "8"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        boolobs(dir.path(), &["orbit", "--n", "3", "--predicate", "atom:99"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        boolobs(dir.path(), &["audit", "--only", "S0-none"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(boolobs(dir.path(), &["--help"]).status.code(), Some(0));
    let blocked = dir.path().join("file");
    std::fs::write(&blocked, "").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_boolobs"))
        .args(["kernel", "--n", "2", "--out"])
        .arg(blocked.join("sub"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn config_file_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(&conf, "seed = 5\ndense_cap = 12\n").unwrap();
    let conf = conf.to_str().unwrap();
    let v = json(&boolobs(
        dir.path(),
        &["kernel", "--n", "2", "--config", conf, "--seed", "9"],
    ));
    assert_eq!(
        (
            v["config"]["seed"].as_u64(),
            v["config"]["dense_cap"].as_u64()
        ),
        (Some(9), Some(12))
    );
    std::fs::write(dir.path().join("bad.conf"), "nonsense\n").unwrap();
    let bad = dir.path().join("bad.conf");
    assert_eq!(
        boolobs(
            dir.path(),
            &["kernel", "--n", "2", "--config", bad.to_str().unwrap()]
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = boolobs(dir.path(), &["code", "--n", "3"]);
    let second = boolobs(dir.path(), &["code", "--n", "3"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cached"));
    let third = boolobs(dir.path(), &["code", "--n", "3", "--no-cache"]);
    assert!(!String::from_utf8_lossy(&third.stderr).contains("cached"));
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn audit_report_and_rerun() {
    let dir = tempfile::tempdir().unwrap();
    let o = boolobs(dir.path(), &["audit", "--format", "json", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let report = json(&o);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["summary"]["errors"], 0);
    let verdicts = report["verdicts"].as_array().unwrap();
    let by_id = |id: &str| {
        verdicts
            .iter()
            .find(|v| v["claim_id"] == id)
            .unwrap()
            .clone()
    };
    assert_eq!(by_id("S5.2-atom-images")["status"], "CONFIRMED");
    assert_eq!(by_id("S5.3-nullity")["status"], "REFUTED");
    assert_eq!(
        by_id("S10-central-charge")["status"],
        "UNDECIDABLE-AT-SCALE"
    );
    for v in verdicts {
        for a in v["artifacts"].as_array().unwrap() {
            assert!(dir.path().join(a.as_str().unwrap()).exists());
        }
        if v["status"] == "REFUTED" {
            assert!(!v["claimed"].is_null() && !v["computed"].is_null());
        }
    }
    assert!(dir.path().join("audit.txt").exists());

    // each rerun line reproduces its computed value
    let other = tempfile::tempdir().unwrap();
    for id in [
        "S5.3-nullity",
        "S6-fixed-space-dimension",
        "S11.2-code-parameters",
    ] {
        let v = by_id(id);
        let line = v["rerun"].as_str().unwrap();
        let mut args: Vec<&str> = line.split_whitespace().skip(1).collect();
        args.extend(["--format", "json"]);
        let again = json(&boolobs(other.path(), &args));
        assert_eq!(again["verdicts"][0]["computed"], v["computed"], "{id}");
    }
}

#[test]
fn audit_list() {
    let dir = tempfile::tempdir().unwrap();
    let o = boolobs(dir.path(), &["audit", "--list"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().any(|l| l == "S5.3-nullity"));
}
