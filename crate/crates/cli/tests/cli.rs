use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxtrace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// `(cell, label, sign)` triples, sorted.
fn epsilon(v: &Value) -> Vec<(String, String, String)> {
    let mut out = Vec::new();
    for c in v["cells"].as_array().unwrap() {
        for t in c["epsilon"].as_array().unwrap() {
            out.push((
                c["index"].to_string(),
                t["label"].to_string(),
                t["sign"].to_string(),
            ));
        }
    }
    out.sort();
    out
}

#[test]
fn cells_match_golden_files() {
    for (rank, ty, file) in [("4", "B", "B4.json"), ("5", "D", "D5.json")] {
        let out = run(&["cells", "--type", ty, "--rank", rank, "--format", "json"]);
        assert!(out.status.success());
        let got: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let path = format!("{}/../core/data/golden/{file}", env!("CARGO_MANIFEST_DIR"));
        let want: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(epsilon(&got), epsilon(&want), "{file}");
    }
}

#[test]
fn a1_traces() {
    let out = run(&["trace", "--type", "A", "--rank", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let traces: Vec<i64> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["trace"].as_i64().unwrap())
        .collect();
    assert_eq!(traces, vec![1, -1]);
}

#[test]
fn b4_text_mirrors_display() {
    let out = run(&["cells", "--type", "B", "--rank", "4"]);
    assert_eq!(
        stdout(&out),
        "c0 [S1]: 4/\n\
         c1 [S2]: -0,1/4 - 1,4/0\n\
         c2 [S2]: 0,1,2/1,4 + 1,2,4/0,1\n\
         c3 [S2]: -0,1,2,3/1,2,4 - 1,2,3,4/0,1,2\n\
         c4 [S1]: 0,1,2,3,4/1,2,3,4\n"
    );
}

#[test]
fn dihedral_and_hecke() {
    let out = run(&["dihedral", "--m", "5"]);
    assert!(stdout(&out).contains("c1: (z5 + z5^4)2_1 + (z5^2 + z5^3)2_2\n"));
    let out = run(&["hecke", "--type", "A", "--rank", "2"]);
    assert_eq!(stdout(&out), "(3): 1 v^4\n(2,1): -1 v^2\n(1,1,1): 1\n");
    let out = run(&["hecke", "--type", "I2", "--m", "8", "--format", "csv"]);
    assert!(stdout(&out).contains("\"2_2\",\"0\",\n"));
}

#[test]
fn output_is_byte_stable() {
    let args = ["cells", "--type", "E8", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--all", "--max-rank", "4"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(
        run(&["trace", "--type", "Q", "--rank", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["trace", "--type", "D", "--rank", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["trace", "--type", "H3"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}
