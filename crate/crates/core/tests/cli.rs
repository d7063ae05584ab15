use std::process::Command;

use arclink_core::cli::run;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("arclink").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn cusp_333() {
    let (code, out, _) = call(&["cusp", "--seq", "3,3,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("monodromy: ((21,8),(-8,-3))"));
    assert!(out.contains("auto-dual: true"));
}

#[test]
fn e8_class() {
    let (code, out, _) = call(&["analyze", &data("e8.graph"), "--bound", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("class: NonCyclicQuotient(2,3,5)"));
}

#[test]
fn icosahedral_group() {
    let (code, out, _) = call(&["quotient", "--group", &data("2I.grp")]);
    assert_eq!(code, 0);
    assert!(out.contains("order=120 classes=9 mckay: 8 = 8 OK"));
}

#[test]
fn dual_and_inoue() {
    let (code, out, _) = call(&["dual", "--seq", "2,2,3,4"]);
    assert_eq!(code, 0);
    assert!(out.contains("MT = TM*: true"));
    let (code, out, _) = call(&["inoue", "--field", &data("golden.field")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("M_u: ((1,1),(1,2))"));
    assert!(out.contains("recovered: (3)"));
}

#[test]
fn json_is_deterministic() {
    let args = ["analyze", &data("brieskorn237.graph"), "--bound", "6", "--json"];
    let (_, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["components"].as_array().unwrap().len(), 19);
}

#[test]
fn input_errors_exit_1() {
    assert_eq!(call(&["analyze", "/nonexistent.graph"]).0, 1);
    assert_eq!(call(&["cusp", "--seq", "2,2"]).0, 1);
    assert_eq!(call(&["cusp", "--seq", "3,x"]).0, 1);
    assert_eq!(call(&["frobnicate"]).0, 1);
    let (code, _, err) = call(&["quotient", "--group", &data("e8.graph")]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn dot_output() {
    let dir = std::env::temp_dir().join(format!("arclink-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e8.dot");
    let (code, _, _) = call(&["analyze", &data("e8.graph"), "--quiet", "--dot", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.contains("e=-2, g=0"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_check_is_green() {
    let out = Command::new(env!("CARGO_BIN_EXE_arclink")).args(["check", "--quiet"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
