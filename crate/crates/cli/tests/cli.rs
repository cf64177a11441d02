use std::process::{Command, Output};

use qalcove::alcove::{admissible, sfill};
use qalcove::{AdmissibleSubset, Filling, LambdaChain, Qbg, TableauElement};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalcove")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const A2: [&str; 6] = ["--type", "A", "--rank", "3", "--lambda", "3,2"];

fn with(cmd: &[&str], extra: &[&str]) -> Vec<String> {
    cmd.iter().chain(&A2).chain(extra).map(|s| s.to_string()).collect()
}

fn args(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

#[test]
fn chain_prints_and_validates() {
    let out = stdout(&args(&with(&["chain"], &[])));
    assert_eq!(out.lines().next(), Some("(2,3),(1,3)|(2,3),(1,3)|(1,2),(1,3)"));
    assert!(out.contains("valid λ-chain of length 6"));
}

#[test]
fn map_gives_sorted_filling() {
    let out = stdout(&args(&with(&["map"], &["--J", "1,2,3,5"])));
    assert_eq!(out, "[2,3][1,2][1]\n");
}

#[test]
fn invert_undoes_map() {
    let out = stdout(&args(&with(&["invert"], &["--tableau", "2,3/1,2/1"])));
    assert_eq!(out, "1,2,3,5\n");
    let json = stdout(&args(&with(&["invert"], &["--tableau", "[[2,3],[1,2],[1]]", "--format", "json"])));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["J"], serde_json::json!([1, 2, 3, 5]));
}

#[test]
fn roundtrip_reports_counts() {
    let out = stdout(&["roundtrip", "--type", "C", "--rank", "2", "--lambda", "1"]);
    assert!(out.contains("|A(λ)| = 4, |B| = 4"), "{out}");
    assert!(out.trim_end().ends_with("pass"));
}

#[test]
fn verify_passes_in_small_rank() {
    for t in ["A", "B", "C", "D"] {
        let out = stdout(&["verify", "--type", t, "--rank", "3"]);
        assert!(out.contains("0 mismatches") || out.contains("0 joined"), "{out}");
    }
}

#[test]
fn exit_codes() {
    // usage errors
    for bad in [
        vec!["chain", "--type", "A", "--rank", "3"],
        vec!["chain", "--type", "E", "--rank", "3", "--lambda", "1"],
        vec!["chain", "--type", "A", "--rank", "9", "--lambda", "1"],
        vec!["chain", "--type", "A", "--rank", "3", "--lambda", "4"],
        vec!["chain", "--type", "A", "--rank", "3", "--lambda", "1,2"],
        vec!["chain", "--type", "A", "--rank", "3", "--lambda", "1", "--format", "dot"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&bad).status.code(), Some(1), "{bad:?}");
    }
    // validation failures
    let not_admissible = with(&["map"], &["--J", "1,9"]);
    assert_eq!(run(&args(&not_admissible)).status.code(), Some(2));
    let not_kn = ["invert", "--type", "C", "--rank", "3", "--lambda", "1,1", "--tableau", "1,1b"];
    let out = run(&not_kn);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Kashiwara-Nakashima"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for cmd in [
        with(&["enumerate"], &["--format", "json"]),
        vec!["qbg", "--type", "B", "--rank", "3", "--format", "dot"].into_iter().map(String::from).collect(),
        vec!["verify", "--type", "D", "--rank", "4", "--format", "json"].into_iter().map(String::from).collect(),
    ] {
        assert_eq!(stdout(&args(&cmd)), stdout(&args(&cmd)), "{cmd:?}");
    }
}

#[test]
fn json_parses_back_into_library_types() {
    let chain: LambdaChain = serde_json::from_str(&stdout(&args(&with(&["chain"], &["--format", "json"])))).unwrap();
    assert_eq!(chain.to_text(), "(2,3),(1,3)|(2,3),(1,3)|(1,2),(1,3)");

    let records: Vec<serde_json::Value> = serde_json::from_str(&stdout(&args(&with(&["enumerate"], &["--format", "json"])))).unwrap();
    assert_eq!(records.len(), 27);
    for r in &records {
        let j: AdmissibleSubset = serde_json::from_value(r["J"].clone()).unwrap();
        let s: Filling = serde_json::from_value(r["sfill"].clone()).unwrap();
        let j = admissible(&chain, j.positions().to_vec()).unwrap();
        assert_eq!(sfill(&chain, &j).unwrap(), s);
    }

    let elements: Vec<TableauElement> = serde_json::from_str(&stdout(&args(&with(&["enumerate"], &["--model", "tableau", "--format", "json"])))).unwrap();
    assert_eq!(elements.len(), records.len());

    let qbg: Qbg = serde_json::from_str(&stdout(&["qbg", "--type", "A", "--rank", "3", "--format", "json"])).unwrap();
    assert_eq!((qbg.vertices.len(), qbg.edges.len()), (6, 15));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("qalcove-cli-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    assert!(stdout(&["qbg", "--type", "A", "--rank", "3", "--format", "dot", "--output", p]).is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 15);
}
