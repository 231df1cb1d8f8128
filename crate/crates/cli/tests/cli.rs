use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const SPO_ARRAY: &str = r#"{"top":[2,2,2,3,3,4,4,4,4],"bottom":["1b","1o","2o","1","1b","1","1","1o","2o"]}"#;
const DUAL_ARRAY: &str = r#"{"top":[1,1,1,2,2,2,3,3,3,3,3,4,4,4,4,4],"bottom":["5b","3b","3","3o","5","4b","1o","1o","2b","2","1b","4","3b","3","2b","1"]}"#;

fn ospkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ospkit")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ospkit-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn assert_input_error(out: &Output) {
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout(out));
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "diagnostic should be one line: {err:?}");
    assert!(out.stdout.is_empty());
}

#[test]
fn power_identity_small_case_matches() {
    let out = ospkit(&["verify", "power", "--m", "1", "--n", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let totals = &report["degrees"][0]["totals"];
    assert_eq!(totals[0]["value"], "9");
    assert_eq!(totals[1]["value"], "9");
    assert_eq!(totals[2]["value"], "9");
}

#[test]
fn power_identity_mismatch_exits_one() {
    let out = ospkit(&["verify", "power", "--m", "1", "--n", "1", "--k", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["degrees"][0]["matched"], false);
    assert_eq!(report["counts"]["pairs"], 99);
}

#[test]
fn trivial_cauchy_matches() {
    let out = ospkit(&["verify", "cauchy", "--m", "1", "--n", "1", "--q", "1", "--k", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["degrees"].as_array().unwrap().iter().all(|d| d["matched"] == true));
    let text = ospkit(&["verify", "cauchy", "--m", "1", "--n", "1", "--q", "1", "--k", "0", "--format", "text"]);
    assert!(stdout(&text).starts_with("cauchy m=1 n=1 q=1 k=0: match"));
}

#[test]
fn correspond_trace_and_inverse_through_files() {
    let pi = temp_file("pi.json", SPO_ARRAY);
    let out = ospkit(&["correspond", "--m", "2", "--n", "2", "--q", "4", "--input", pi.to_str().unwrap(), "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["trace"].as_array().unwrap().len(), 9);
    assert_eq!(doc["result"]["l"], serde_json::json!({"top": [3, 4], "bottom": [2, 3]}));

    let plain = ospkit(&["correspond", "--m", "2", "--n", "2", "--q", "4", "--input", pi.to_str().unwrap()]);
    let triple = temp_file("triple.json", &stdout(&plain));
    let back =
        ospkit(&["correspond", "--inverse", "--m", "2", "--n", "2", "--q", "4", "--input", triple.to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(json(&back), serde_json::from_str::<Value>(SPO_ARRAY).unwrap());
    let _ = std::fs::remove_file(pi);
    let _ = std::fs::remove_file(triple);
}

/// Runs `verb` forward on `input`, then inverts the result.
fn roundtrip(verb: &str, params: &[&str], input: &str) {
    let mut args = vec![verb];
    args.extend_from_slice(params);
    let mut fwd = args.clone();
    fwd.extend(["--input", input]);
    let out = ospkit(&fwd);
    assert_eq!(out.status.code(), Some(0), "{verb}: {}", String::from_utf8_lossy(&out.stderr));
    let image = stdout(&out);
    let mut inv = args.clone();
    inv.extend(["--inverse", "--input", image.trim()]);
    let back = ospkit(&inv);
    assert_eq!(back.status.code(), Some(0), "{verb} inverse: {}", String::from_utf8_lossy(&back.stderr));
    assert_eq!(json(&back), serde_json::from_str::<Value>(input).unwrap(), "{verb}");
}

#[test]
fn every_correspondence_inverts() {
    roundtrip("correspond", &["--m", "2", "--n", "2", "--q", "4"], SPO_ARRAY);
    roundtrip("dual-correspond", &["--m", "5", "--n", "3", "--q", "4"], DUAL_ARRAY);
    roundtrip("burge", &["--q", "9"], r#"{"top":[4,4,5,8,9],"bottom":[1,3,2,5,4]}"#);
    roundtrip("dual-burge", &["--q", "4"], r#"{"top":[3,3,4,4,4],"bottom":[3,2,3,3,2]}"#);
    roundtrip("word", &["--m", "2", "--n", "2"], r#"["1o","1b","2b","2o","1","2","1b","1"]"#);
}

#[test]
fn insertion_and_its_inverse() {
    let input = r#"{"tableau":{"shape":[4,4,3,1],"rows":[["1","1b","2","1o"],["2","2b","3","2o"],["4","4","2o"],["5"]]},"letter":"1b"}"#;
    let out = ospkit(&["insert", "--m", "5", "--n", "2", "--trace", "--input", input]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["effect"], serde_json::json!({"cancelled": [2, 4]}));
    assert_eq!(doc["trace"][1]["op"], "cancel");
    let inv = serde_json::json!({"tableau": doc["result"], "effect": doc["effect"]}).to_string();
    let back = ospkit(&["insert", "--m", "5", "--n", "2", "--inverse", "--input", &inv]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(json(&back)["letter"], "1b");
}

#[test]
fn burge_forward_golden() {
    let out = ospkit(&["burge", "--q", "9", "--input", r#"{"top":[4,4,5,8,9],"bottom":[1,3,2,5,4]}"#]);
    assert_eq!(json(&out)["rows"], serde_json::json!([[1, 2, 4], [3, 4, 5], [4, 8], [5, 9]]));
}

#[test]
fn output_is_deterministic() {
    let args = ["dual-correspond", "--m", "5", "--n", "3", "--q", "4", "--trace", "--input", DUAL_ARRAY];
    let a = ospkit(&args);
    let b = ospkit(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "dual-cauchy", "--m", "1", "--n", "1", "--q", "2", "--k", "3"];
    assert_eq!(ospkit(&args).stdout, ospkit(&args).stdout);
}

#[test]
fn infeasible_inverses_exit_one() {
    let triple =
        r#"{"ptilde":{"shape":[1],"rows":[["1"]]},"pt":{"shape":[1],"rows":[[1]]},"l":{"top":[2],"bottom":[1]}}"#;
    let out = ospkit(&["dual-correspond", "--inverse", "--m", "1", "--n", "1", "--q", "2", "--input", triple]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infeasible"));

    let pair = r#"{"t":{"shape":[2],"rows":[["1","1"]]},"chain":[[],[1],[1,1],[1],[2]]}"#;
    let out = ospkit(&["word", "--inverse", "--m", "1", "--n", "1", "--input", pair]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    assert_input_error(&ospkit(&["frobnicate"]));
    assert_input_error(&ospkit(&["correspond", "--input", "{not json"]));
    assert_input_error(&ospkit(&[
        "correspond",
        "--m",
        "1",
        "--n",
        "0",
        "--q",
        "2",
        "--input",
        r#"{"top":[1],"bottom":["3"]}"#,
    ]));
    assert_input_error(&ospkit(&["correspond", "--input", "/nonexistent/pi.json"]));
    assert_input_error(&ospkit(&["enumerate", "--kind", "spo", "--shape", "3,3,3"]));
    assert_input_error(&ospkit(&["enumerate", "--kind", "spo", "--shape", "1,2"]));
    assert_input_error(&ospkit(&["verify", "cauchy", "--q", "0"]));
}

#[test]
fn enumeration_counts() {
    let out = ospkit(&["enumerate", "--kind", "spo", "--shape", "1,1", "--m", "1", "--n", "1"]);
    assert_eq!(json(&out)["count"], 3);
    let out = ospkit(&["enumerate", "--kind", "words", "--k", "3", "--m", "1", "--n", "1"]);
    assert_eq!(json(&out)["count"], 27);
    let out = ospkit(&["enumerate", "--kind", "updown", "--shape", "", "--k", "4", "--m", "1", "--n", "1"]);
    assert_eq!(json(&out)["count"], 3);
}

#[test]
fn character_methods_agree() {
    let direct = ospkit(&["character", "--shape", "2", "--m", "1", "--n", "2"]);
    let musum = ospkit(&["character", "--shape", "2", "--m", "1", "--n", "2", "--method", "mu-sum"]);
    assert_eq!(direct.stdout, musum.stdout);
    assert_eq!(json(&direct).as_array().unwrap().len(), 8);
}

#[test]
fn render_recognises_documents() {
    let triple = stdout(&ospkit(&["correspond", "--m", "2", "--n", "2", "--q", "4", "--input", SPO_ARRAY]));
    let out = ospkit(&["render", "--input", triple.trim()]);
    assert_eq!(stdout(&out), "P̃:\n  1 1o 2o\n  1o 2o\nP:\n  2 2 4\n  4 4\nL:\n  3 4\n  2 3\n");
    assert_input_error(&ospkit(&["render", "--input", r#"{"what":1}"#]));
}
