use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlinde-kit")).args(args).env_remove("VK_CONFIG").output().unwrap()
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn lie_reports() {
    let (code, v) = run_json(&["lie", "A", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "verlinde-kit/1");
    assert_eq!(v["dual_coxeter_number"], 3);
    assert_eq!(v["positive_root_count"], 3);
    let (_, v) = run_json(&["lie", "G", "2"]);
    assert_eq!(v["dual_coxeter_number"], 4);
    let out = run(&["lie", "E", "9"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn fusion_tables() {
    let (code, v) = run_json(&["fusion", "A", "1", "2", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["verify"]["oracles_agree"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 10);
    // σ ⊗ σ = 1 + ψ
    let (_, v) = run_json(&["fusion", "A", "1", "2", "1", "1"]);
    let s: Vec<&Value> = v["entries"].as_array().unwrap().iter().map(|e| &e["s"]).collect();
    assert_eq!(s, vec![&serde_json::json!([0]), &serde_json::json!([2])]);

    let out = run(&["fusion", "A", "2", "--level", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,j,s,N"));
    // A simple-current ring: each product has a single term.
    assert_eq!(lines.count(), 9);

    let (_, a) = run_json(&["fusion", "A", "2", "2", "1,0", "0,1"]);
    let (_, b) = run_json(&["fusion", "A", "2", "--level", "2", "1,0", "0,1"]);
    assert_eq!(a, b);
    assert_eq!(a["entries"].as_array().unwrap().len(), 2);

    let (_, v) = run_json(&["fusion", "A", "1", "0"]);
    assert_eq!(v["entries"], serde_json::json!([{"k": [0], "j": [0], "s": [0], "N": 1}]));
}

#[test]
fn parallel_verification_is_deterministic() {
    let one = run(&["fusion", "B", "2", "2", "--verify", "--parallel", "1"]);
    let four = run(&["fusion", "B", "2", "2", "--verify", "--parallel", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn rep_commands() {
    let e6 = fixture("e6.json");
    let (code, v) = run_json(&["rep", "spectrum", e6.to_str().unwrap()]);
    assert_eq!(code, 0);
    let ones = v["spectrum"].as_array().unwrap().iter().filter(|r| r["multiplicity"] == 1).count();
    assert_eq!(ones, 6);

    let out = run(&["rep", "validate", fixture("a3_wronglevel.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let (code, v) = run_json(&["rep", "exponents", fixture("a3.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["ade_equality"], true);
    for row in v["exponents"].as_array().unwrap() {
        assert_eq!(row["m_phi0"], row["m_pi"]);
    }

    let (code, v) = run_json(&["rep", "roots", fixture("d4.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["roots"]["count"], 24);
    assert_eq!(v["roots"]["distinct"], true);

    let (code, v) = run_json(&["rep", "validate", fixture("sl3_level1.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["validation"]["grading"], true);
}

#[test]
fn check_dynkin() {
    let (code, v) = run_json(&["check-dynkin", fixture("e6.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    assert_eq!(v["natural"], true);
    let (code, v) = run_json(&["check-dynkin", fixture("a3.json").to_str().unwrap(), "--level", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["valid"], false);
    let (code, _) = run_json(&["check-dynkin", fixture("a1_point.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["check-dynkin", fixture("triangle.json").to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors() {
    let dir = std::env::temp_dir().join(format!("vk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"algebra": {"family": "A", "rank": 1}, "level": 1, "vertices": []}"#).unwrap();
    assert_eq!(run(&["rep", "validate", bad.to_str().unwrap()]).status.code(), Some(4));
    let missing = dir.join("missing.json");
    assert_eq!(run(&["check-dynkin", missing.to_str().unwrap()]).status.code(), Some(4));
    assert_eq!(run(&["fusion", "A", "1", "2", "--tolerance", "0.5"]).status.code(), Some(4));
    assert_eq!(run(&["fusion", "A", "3", "4", "--torus-cap", "10"]).status.code(), Some(3));
}

#[test]
fn config_file_and_flag_override() {
    let dir = std::env::temp_dir().join(format!("vk-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("vk.toml");
    std::fs::write(&cfg, "format = \"csv\"\ntorus_cap = 10\n").unwrap();
    let with = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_verlinde-kit")).args(args).env("VK_CONFIG", &cfg).output().unwrap()
    };
    let out = with(&["fusion", "A", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("k,j,s,N"));
    assert_eq!(with(&["fusion", "A", "2", "3"]).status.code(), Some(3));
    let out = with(&["fusion", "A", "2", "3", "--torus-cap", "1000", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_ok());
    std::fs::write(&cfg, "colour = 1\n").unwrap();
    assert_eq!(with(&["lie", "A", "1"]).status.code(), Some(4));
}
