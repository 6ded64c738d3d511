use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley"))
        .args(args)
        .env_remove("CAYLEY_FIXTURES")
        .output()
        .expect("spawn")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cayley-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn degrees_report_is_green() {
    let out = cayley(&["verify", "degrees", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["chamber"], serde_json::json!([1, 2]));
    let sigma2 = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "degrees.sigma_2")
        .unwrap();
    assert_eq!(sigma2["computed"], 82);
    assert_eq!(sigma2["expected"], 82);
    assert_eq!(sigma2["status"], "pass");
}

#[test]
fn json_output_is_deterministic() {
    let a = cayley(&["verify", "mult", "--format", "json"]);
    let b = cayley(&["verify", "mult", "--format", "json"]);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failing_group_exits_one() {
    let out = cayley(&["verify", "dual"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("dual.degree"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cayley(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cayley(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(
        cayley(&["--chamber", "1,1", "verify", "betti"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dump_classes_round_trips() {
    let dir = scratch("classes");
    let path = dir.join("classes.json");
    let out = cayley(&["dump", "classes", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 15);
    for r in records {
        assert!(r["label"].is_string());
        assert!(r["codim"].is_u64());
        assert_eq!(r["values"].as_object().unwrap().len(), 15);
    }
    let eight = records.iter().find(|r| r["label"] == "8").unwrap();
    assert_eq!(eight["codim"], 8);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn csv_dumps() {
    let out = cayley(&["dump", "hilbert", "--format", "csv", "--kmax", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("k,P(k)\n0,1\n1,28\n"), "{text}");
    let out = cayley(&["dump", "restriction", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 28);
    assert_eq!(
        cayley(&["dump", "gkm", "--format", "csv"]).status.code(),
        Some(1)
    );
}

#[test]
fn fixture_directory_override() {
    let dir = scratch("fixtures");
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    for entry in std::fs::read_dir(&src).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.join(p.file_name().unwrap())).unwrap();
    }
    let degrees = dir.join("degrees.json");
    let text = std::fs::read_to_string(&degrees)
        .unwrap()
        .replacen("82", "83", 1);
    std::fs::write(&degrees, text).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_cayley"))
        .args(["verify", "degrees", "--format", "json"])
        .env("CAYLEY_FIXTURES", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["fixtures"], dir.to_str().unwrap());
    std::fs::remove_dir_all(dir).ok();
}
