use std::process::{Command, Output};

use serde_json::Value;

fn ribbonres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonres")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn resolve_lists_shapes_and_degrees() {
    let out = ribbonres(&["resolve", "--d", "3", "--r", "4", "--n", "2", "--imax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let steps = v["summary"]["steps"].as_array().unwrap();
    let shapes: Vec<&str> = steps.iter().map(|s| s["shape"].as_str().unwrap()).collect();
    let degrees: Vec<u64> = steps.iter().map(|s| s["generator_degree"].as_u64().unwrap()).collect();
    assert_eq!(shapes, ["(4)", "(3,4)", "(3,3,4)"]);
    assert_eq!(degrees, [4, 7, 10]);
    let exact = v["reports"].as_array().unwrap().iter().find(|r| r["check"] == "resolution_exact").unwrap();
    assert_eq!(exact["status"], "pass");
}

#[test]
fn tor_three_vanishes_in_two_variables() {
    // σ(2,1,1,1,3) has a column of height 5, so it has no fillings with 2 letters
    let out = ribbonres(&["tor", "--d", "1", "--r", "2", "--rprime", "3", "--i", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["summary"]["degrees"], serde_json::json!([]));
}

#[test]
fn tor_concentrates_in_one_degree() {
    // σ(1,2,1) is two height-2 columns joined by a row; with 2 letters the only
    // filling has 1 on top and 2 below in each column
    let out = ribbonres(&["tor", "--d", "2", "--r", "1", "--rprime", "1", "--i", "1", "--n", "2", "--ring", "fp:3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let degrees = v["summary"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 1);
    assert_eq!(degrees[0]["degree"], 4);
    assert_eq!(degrees[0]["dim"], 1);
    assert_eq!(degrees[0]["multidegrees"], serde_json::json!([{"multidegree": [2, 2], "dim": 1}]));
}

#[test]
fn verify_all_passes_over_f2() {
    let out = ribbonres(&["verify-all", "--n", "2", "--ring", "fp:2", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["status"], "pass");
    assert!(v["first_failure"].is_null());
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify-all", "--n", "2", "--ring", "q", "--no-timings", "--threads", "3"];
    let a = ribbonres(&args);
    let b = ribbonres(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let one = Command::new(env!("CARGO_BIN_EXE_ribbonres"))
        .args(["verify-all", "--n", "2", "--ring", "q", "--no-timings"])
        .env("RIBBONRES_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, one.stdout);
}

#[test]
fn injected_fault_exits_two() {
    let out = ribbonres(&["verify-all", "--n", "2", "--ring", "q", "--inject-fault", "sign-flip", "--no-timings"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["first_failure"]["check"], "d2_zero");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(ribbonres(&["tor", "--d", "1"]).status.code(), Some(1));
    assert_eq!(ribbonres(&["hom", "--d", "1", "--r", "1", "--rprime", "1", "--ring", "fp:4"]).status.code(), Some(1));
    assert_eq!(ribbonres(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(ribbonres(&["resolve", "--d", "1", "--r", "0"]).status.code(), Some(1));
    assert_eq!(ribbonres(&["--help"]).status.code(), Some(0));
}

#[test]
fn csv_output_to_file() {
    let dir = std::env::temp_dir().join(format!("ribbonres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hom.csv");
    let out = ribbonres(&[
        "hom", "--d", "2", "--r", "3", "--rprime", "1", "--n", "2", "--format", "csv", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check,anchor,params,expected,computed,status,millis"));
    assert!(lines.next().unwrap().starts_with("hom,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn poset_with_composition() {
    let out = ribbonres(&["poset", "--alpha", "1,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["summary"]["ranks"], serde_json::json!([1, 3]));
}
