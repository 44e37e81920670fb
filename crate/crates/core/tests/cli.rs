//! The `vertexkernel` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vertexkernel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn input(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", "--input", &input("virasoro.json")]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let bad = run(&["validate", "--input", &input("virasoro_perturbed.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("witness:"));

    let cut = run(&["validate", "--input", &input("truncated.json")]);
    assert_eq!(cut.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cut.stderr).contains("error"));

    let missing = run(&["validate", "--input", "/nonexistent/virasoro.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn compute_examples() {
    let v = input("virasoro.json");
    let o = run(&["compute", "--input", &v, "bracket", "L(3)", "L(-1)"]);
    assert_eq!(stdout(&o).trim(), "4·L(1) + 1/2·c(-1)");

    let o = run(&["compute", "--input", &v, "mode", "L", "5", "L(-1)|0⟩"]);
    assert_eq!(stdout(&o).trim(), "0");

    let o = run(&["compute", "--input", &v, "delta", "L(-1)|0⟩"]);
    assert_eq!(stdout(&o).trim(), "|0⟩ ⊗ L(-1)|0⟩ + L(-1)|0⟩ ⊗ |0⟩");

    let o = run(&["compute", "--input", &v, "product", "L", "1", "L", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["value"], serde_json::json!([{"coeff": "2", "d": 0, "gen": "L"}]));

    let o = run(&["compute", "--input", &v, "mode", "L(-2)|0⟩", "-1", "L(-2)|0⟩", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["value"][0]["word"], serde_json::json!([{"gen": "L", "n": -2}, {"gen": "L", "n": -2}]));

    let o = run(&["compute", "--input", &v, "bracket", "X(3)", "L(-1)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_suites() {
    let o = run(&["check", "--input", &input("virasoro.json"), "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: PASS"));

    let o = run(&["check", "--input", &input("bl_rank1.json"), "--suite", "bl"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = run(&["check", "--input", &input("heisenberg_tensor_phi.json"), "--suite", "tensor-phi"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("phi-central"));

    let o = run(&["check", "--input", &input("virasoro_perturbed.json"), "--suite", "jacobi", "--max-weight", "4"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["check", "--input", &input("virasoro.json"), "--suite", "bl"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic_and_sorted() {
    let args = ["check", "--input", &input("bl_rank1.json"), "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let j: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let ids: Vec<String> = j["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(j["passed"], serde_json::json!(true));
}

#[test]
fn seeded_sampling_is_reproducible() {
    let args = ["check", "--input", &input("virasoro.json"), "--suite", "commutator", "--seed", "11", "--format", "json"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn dims_tables() {
    let o = run(&["dims", "--input", &input("virasoro.json"), "--max-weight", "6", "--torsion-bound", "0", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let col = |k: &str| -> Vec<u64> { j["table"].as_array().unwrap().iter().map(|r| r[k].as_u64().unwrap()).collect() };
    assert_eq!(col("dim"), vec![1, 0, 1, 1, 2, 2, 4]);
    assert_eq!(col("primitive_dim"), vec![0, 0, 1, 1, 1, 1, 1]);

    let o = run(&["dims", "--input", &input("virasoro.json"), "--max-weight", "0", "--torsion-bound", "1", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["table"][0]["primitive_dim"], serde_json::json!(1));

    let o = run(&["dims", "--input", &input("abelian1.json"), "--max-weight", "3", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let dims: Vec<u64> = j["table"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 2, 3]);
}

#[test]
fn thread_cap_is_honored() {
    let o = Command::new(env!("CARGO_BIN_EXE_vertexkernel"))
        .args(["check", "--input", &input("bl_rank1.json"), "--suite", "morphism"])
        .env("VERTEXKERNEL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn presentation_written_by_the_library_validates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis2.json");
    let p = vertexkernel::vla::builtin_heisenberg(2).unwrap();
    std::fs::write(&path, vertexkernel::json::presentation_to_string(&p)).unwrap();
    let o = run(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}
