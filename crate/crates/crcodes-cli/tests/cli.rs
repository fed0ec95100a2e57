//! End-to-end tests against the built binary: document round trips, exit
//! codes, report stability, and the reproduction battery.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crcodes"))
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> std::path::PathBuf {
    let out = dir.join(name);
    let result = bin()
        .args(["construct"])
        .args(args)
        .args(["--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(
        result.status.success(),
        "construct {args:?} failed: {}",
        String::from_utf8_lossy(&result.stderr)
    );
    out
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn construct_writes_a_rebuildable_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(
        dir.path(),
        "i232.json",
        &["--family", "I", "--q", "2", "--k", "3", "--c", "2"],
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["n"], 14);
    assert_eq!(doc["k"], 8);
    assert_eq!(doc["family"], "I");
    assert_eq!(doc["H"].as_array().unwrap().len(), 6);
    assert_eq!(doc["params"]["c"], 2);
}

#[test]
fn construct_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bad.json");
    // no cyclic Hamming code: gcd(n, q-1) = gcd(4, 2) != 1
    let result = bin()
        .args(["construct", "--family", "I", "--q", "3", "--k", "2", "--c", "2"])
        .args(["--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(result.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&result.stderr).contains("cyclic"));
    assert!(!out.exists());

    let result = bin()
        .args(["construct", "--family", "sporadic9"])
        .args(["--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(result.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&result.stderr).contains("unknown"));
}

#[test]
fn verify_confirms_a_family_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(
        dir.path(),
        "i232.json",
        &["--family", "I", "--q", "2", "--k", "3", "--c", "2"],
    );
    let result = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(result.status.code(), Some(0));
    let report = stdout_json(&result);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["is_cr"], true);
    assert_eq!(report["rho"], 2);
    assert_eq!(report["ia"], "{14,7;1,2}");
    assert_eq!(report["ia"], report["ia_predicted"]);
    assert_eq!(report["c3"], 14);
    assert_eq!(report["c3"], report["c3_predicted"]);
    assert_eq!(report["dual_weights"], serde_json::json!([[4, 14], [8, 49]]));
    assert_eq!(report["code"]["d"], 3);
    assert_eq!(report["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_exits_one_on_a_non_regular_extension() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(
        dir.path(),
        "i232x.json",
        &[
            "--family", "I", "--q", "2", "--k", "3", "--c", "2", "--extend",
        ],
    );
    let result = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(result.status.code(), Some(1));
    let report = stdout_json(&result);
    assert_eq!(report["is_cr"], false);
    assert!(report["witness"].is_array());
    assert_eq!(report["code"]["d"], 4);
}

#[test]
fn verify_checks_sporadic_arrays() {
    let dir = tempfile::tempdir().unwrap();
    for (family, n, ia) in [
        ("sporadic1", 15, "{15,12,1;1,4,15}"),
        ("sporadic2", 18, "{18,15;1,6}"),
    ] {
        let path = construct(
            dir.path(),
            &format!("{family}.json"),
            &["--family", family],
        );
        let result = bin().arg("verify").arg(&path).output().unwrap();
        assert_eq!(result.status.code(), Some(0), "{family}");
        let report = stdout_json(&result);
        assert_eq!(report["code"]["n"], n, "{family}");
        assert_eq!(report["ia"], ia, "{family}");
        assert_eq!(report["ia"], report["ia_predicted"], "{family}");
    }
}

#[test]
fn verify_report_is_stable_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(
        dir.path(),
        "s1.json",
        &["--family", "sporadic1"],
    );
    let mut reports = Vec::new();
    for _ in 0..2 {
        let result = bin().arg("verify").arg(&path).output().unwrap();
        assert_eq!(result.status.code(), Some(0));
        let mut report = stdout_json(&result);
        // wall time is the one nondeterministic field
        report.as_object_mut().unwrap().remove("timing_ms");
        reports.push(report);
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn budget_flag_overrides_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(
        dir.path(),
        "i232.json",
        &["--family", "I", "--q", "2", "--k", "3", "--c", "2"],
    );
    let result = bin()
        .arg("verify")
        .arg(&path)
        .env("CRCODES_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(result.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&result.stderr).contains("budget"));

    let result = bin()
        .arg("verify")
        .arg(&path)
        .args(["--budget", "default"])
        .env("CRCODES_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(result.status.code(), Some(0));
}

#[test]
fn reproduce_with_a_tiny_budget_skips() {
    let result = bin()
        .args(["reproduce", "--budget", "tiny", "--json"])
        .output()
        .unwrap();
    assert_eq!(result.status.code(), Some(1));
    let summary = stdout_json(&result);
    assert_eq!(summary["schema"], 1);
    assert_eq!(summary["all_passed"], false);
    let statuses: Vec<&str> = summary["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["status"].as_str().unwrap())
        .collect();
    assert_eq!(statuses.len(), 10);
    assert!(statuses.iter().any(|&s| s == "SKIPPED"));
    assert!(!statuses.iter().any(|&s| s == "FAIL"));
}

#[test]
fn reproduce_passes_under_the_default_budget() {
    let result = bin().arg("reproduce").output().unwrap();
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert_eq!(
        result.status.code(),
        Some(0),
        "reproduce failed:\n{stdout}"
    );
    assert_eq!(stdout.matches(" PASS ").count(), 10, "{stdout}");
    assert!(stdout.contains("10 passed, 0 failed, 0 skipped"));
}
