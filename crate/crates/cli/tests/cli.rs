use std::process::{Command, Output};

use serde_json::{json, Value};

fn sympdec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympdec"))
        .args(args)
        .env_remove("SYMPDEC_SEED")
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> (Value, i32) {
    let out = sympdec(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, out.status.code().unwrap())
}

#[test]
fn pi_queries() {
    let (v, code) = json_of(&["pi", "--family", "Sp", "--n", "1", "--i", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["group"], json!([12]));
    let (v, _) = json_of(&["pi", "--family", "SO", "--n", "3", "--i", "8", "--space", "classifying"]);
    assert_eq!(v["group"], json!("torsion-only"));
    let (v, _) = json_of(&["pi", "--family", "PSp", "--n", "2", "--i", "12", "--space", "classifying"]);
    assert_eq!(v["group"], json!([2]));
    assert!(v["provenance"].as_str().unwrap().starts_with("asserted"));
}

#[test]
fn induced_j_in_degree_four() {
    let (v, code) = json_of(&["induced", "J", "--m", "2", "--n", "9", "--i", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["matrix"], json!([[9, 4], [16, 7]]));
    assert_eq!(v["isomorphism"], json!(true));
}

#[test]
fn induced_z_dependence_is_reported() {
    let (v, _) = json_of(&["induced", "J", "--m", "2", "--n", "9", "--i", "2"]);
    assert_eq!(v["z_dependent"], json!(true));
    assert_eq!(v["candidates"].as_array().unwrap().len(), 2);
    let (v, _) = json_of(&["induced", "J", "--m", "2", "--n", "9", "--i", "2", "--z", "1"]);
    assert_eq!(v["z_dependent"], json!(false));
    assert_eq!(v["matrix"], json!([[1, 0], [1, 1]]));
}

#[test]
fn decisions() {
    let (v, code) = json_of(&["decide", "azumaya", "--m", "2", "--n", "9", "--dim", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], json!("Decomposable"));
    assert_eq!(v["connectivity"], json!(7));

    let (v, _) = json_of(&["decide", "azumaya", "--m", "2", "--n", "13", "--dim", "12"]);
    assert_eq!(v["verdict"], json!("NotCovered"));
    assert_eq!(v["obstruction"]["degree"], json!(12));

    let (v, _) = json_of(&["decide", "bundle", "--m", "3", "--n", "11", "--dim", "11"]);
    assert_eq!(v["verdict"], json!("Decomposable"));
}

#[test]
fn examples_on_spheres() {
    let (v, code) = json_of(&["example", "sphere-c", "--m", "4", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], json!("NoSection"));
    assert_eq!(v["obstruction"]["degree"], json!(8));
    let (_, code) = json_of(&["example", "sphere-4m4", "--m", "2", "--n", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(json_of(&["bezout", "--m", "2", "--n", "9"]).1, 0);
    assert_eq!(json_of(&["bezout", "--m", "2", "--n", "4"]).1, 2);
    assert_eq!(json_of(&["connectivity", "--m", "3", "--n", "9"]).1, 2);
    assert_eq!(json_of(&["induced", "tensor-sp-o", "--m", "1", "--n", "3", "--i", "9"]).1, 2);
    assert_eq!(json_of(&["pi", "--family", "Xq", "--n", "1", "--i", "1"]).1, 2);
    assert_eq!(json_of(&["verify", "closure", "--max-m", "8", "--max-n", "8", "--max-r", "8"]).1, 2);
    assert_eq!(json_of(&["postnikov", "--n", "11"]).1, 0);
}

#[test]
fn human_output() {
    let out = sympdec(&["--output", "human", "connectivity", "--m", "2", "--n", "9"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("J is 7-connected"));
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "all", "--samples", "5", "--seed", "17"];
    let a = sympdec(&args);
    let b = sympdec(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let c = Command::new(env!("CARGO_BIN_EXE_sympdec"))
        .args(["verify", "all", "--samples", "5"])
        .env("SYMPDEC_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);

    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["failures"], json!([]));
    assert!(v.get("elapsed_ms").is_none());
}
