use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidet"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn braidet")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

#[test]
fn det_examples() {
    let o = run(&["det", "3,1,1,0"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["determinant"], "3");

    let o = run(&["det", "--word", "s1^3 s2^-1"]);
    assert!(o.status.success());
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["determinant"], "3");
    assert_eq!(rec["alexander"], "1 - t + t^2");

    let o = run(&["det", "1,1,4,0"]);
    assert_eq!(json_lines(&o)[0]["determinant"], "45");
}

#[test]
fn det_preserves_input_order() {
    let inputs = ["1,1,5,0", "3,1,1,0", "1,5,1,2", "5,3,1,-1", "1,1,4,-1"];
    let mut args = vec!["det"];
    args.extend(inputs);
    let o = bin().args(&args).env("BRAIDET_THREADS", "4").output().unwrap();
    let dets: Vec<_> = json_lines(&o)
        .iter()
        .map(|r| r["determinant"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(dets, ["121", "3", "5", "19", "49"]);
}

#[test]
fn det_reads_stdin() {
    use std::io::Write;
    let mut child = bin()
        .args(["det", "--route", "closed"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# table rows\n7,1,1,0\n\n3,3,1,1\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["determinant"], "7");
    assert_eq!(recs[1]["determinant"], "13");
    assert_eq!(recs[1]["alexander"], Value::Null);
}

#[test]
fn det_output_is_deterministic() {
    let a = run(&["det", "1,1,5,0", "2,3,4,-2"]);
    let b = run(&["det", "1,1,5,0", "2,3,4,-2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_code_two_on_bad_input() {
    assert_eq!(run(&["det", "1,1,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["det", "--word", "s3"]).status.code(), Some(2));
    assert_eq!(run(&["det", "--word", "--route", "closed", "s1"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    let o = bin().args(["det", "3,1,1,0"]).env("BRAIDET_THREADS", "zero").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn expand_examples() {
    assert_eq!(stdout(&run(&["expand", "3,1,1,0"])), "s1^3 s2^-1\n");
    assert_eq!(stdout(&run(&["expand", "1,1,1,1"])), "s1 s2^-1 s1 s2 s1 s2 s1 s2\n");
    assert_eq!(
        stdout(&run(&["expand", "1,1,1,-1"])),
        "s1 s2^-1 s2^-1 s1^-1 s2^-1 s1^-1 s2^-1 s1^-1\n"
    );
}

#[test]
fn table_formats() {
    let params = data("table1.params");
    let params = params.to_str().unwrap();
    let csv = run(&["table", params, "--format", "csv"]);
    assert!(csv.status.success());
    assert_eq!(stdout(&csv), std::fs::read_to_string(data("table1.golden.csv")).unwrap());

    let tex = run(&["table", params, "--format", "latex"]);
    assert_eq!(stdout(&tex), std::fs::read_to_string(data("table1.golden.tex")).unwrap());

    let json = run(&["table", params]);
    assert_eq!(json_lines(&json).len(), 17);
}

#[test]
fn table_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.params");
    std::fs::write(&empty, "").unwrap();
    let o = run(&["table", empty.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m1,m2,n,l,name,det\n");

    let bad = dir.path().join("bad.params");
    std::fs::write(&bad, "3,1,1,0 3_1\n3,1,x,0 oops\n").unwrap();
    let o = run(&["table", bad.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert!(o.stdout.is_empty());

    let missing = dir.path().join("missing.params");
    assert_eq!(run(&["table", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "torus", "--max", "50"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["checks"], 50);
    assert_eq!(r["passed"], 50);

    let o = run(&["verify", "routes", "--grid", "3,3,4,2"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["checks"], 3 * 3 * 4 * 5);

    let o = run(&["verify", "burau-props", "--words", "50", "--seed", "9"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["checks"], 300);

    assert_eq!(run(&["verify", "routes", "--grid", "1,2"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let suites: Vec<_> = json_lines(&o)
        .iter()
        .map(|r| r["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(suites, ["weaving", "hybrid", "torus", "one-five", "routes", "burau-props"]);
}

#[test]
fn json_outputs_match_shipped_schemas() {
    let record = schema("output-record.schema.json");
    let o = run(&["det", "3,1,1,0", "1,1,4,-1", "4,4,2,1", "2,5,3,-3"]);
    let o2 = run(&["det", "--word", "s1^3 s2^-1", "s1", ""]);
    let o3 = run(&["det", "--route", "matrix", "1,1,2,0"]);
    for rec in json_lines(&o).iter().chain(&json_lines(&o2)).chain(&json_lines(&o3)) {
        assert!(record.is_valid(rec), "{rec}");
    }
    assert_eq!(json_lines(&o2).len(), 3);

    let row = schema("table-row.schema.json");
    let params = data("table1.params");
    for rec in json_lines(&run(&["table", params.to_str().unwrap()])) {
        assert!(row.is_valid(&rec), "{rec}");
    }

    let report = schema("suite-report.schema.json");
    let o = run(&["verify", "all", "--words", "20", "--grid", "2,2,2,1"]);
    for rec in json_lines(&o) {
        assert!(report.is_valid(&rec), "{rec}");
    }
    // the schemas do reject malformed records
    assert!(!record.is_valid(&serde_json::json!({"determinant": 3})));
}
