//! End-to-end behaviour of the binary: outputs, exit codes, determinism.

use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fold-soergel"));
    c.env_remove("FOLD_SOERGEL_DEGREE_BOUND");
    c
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{:?} failed: {}", args, out);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn verify_shipped_catalog_passes() {
    let v = json(&["verify"]);
    assert!(v["total"].as_u64().unwrap() >= 60);
    assert_eq!(v["failed"], 0);
    assert!(v["relations"].as_array().unwrap().iter().all(|r| r["origin"].as_str().is_some_and(|o| !o.is_empty())));
}

#[test]
fn verify_only_one_id() {
    let v = json(&["verify", "--only", "barbell.green"]);
    assert_eq!(v["total"], 1);
    assert_eq!(v["relations"][0]["id"], "barbell.green");
}

#[test]
fn verify_reports_broken_relation_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    std::fs::write(
        &path,
        "{\"id\":\"barbell.green\",\"kind\":\"defining\",\"origin\":\"corrupted\",\"lhs\":\"dotu_g . dotd_g\",\"rhs\":\"poly[as*at]\"}\n",
    )
    .unwrap();
    let (code, out) = run(&["verify", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{}", out);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["relations"][0]["pass"], false);
}

#[test]
fn parse_and_shape_errors_exit_2() {
    assert_eq!(run(&["eval", "dotu_g . dotu_g"]).0, 2);
    assert_eq!(run(&["eval", "dotu_q"]).0, 2);
    assert_eq!(run(&["ring", "Y*"]).0, 2);
    assert_eq!(run(&["decompose", "YQ"]).0, 2);
    assert_eq!(run(&["hom", "--src", "W", "--dst", "1", "--max-degree", "4"]).0, 2);
    assert_eq!(run(&["verify", "--only", "no.such.relation"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbled.jsonl");
    std::fs::write(&path, "not json\n").unwrap();
    assert_eq!(run(&["verify", "--catalog", path.to_str().unwrap()]).0, 2);
}

#[test]
fn hom_y_to_unit() {
    let v = json(&["hom", "--src", "Y", "--dst", "1", "--max-degree", "12"]);
    assert_eq!(v["numerator"], "v^3+v");
    let dims = v["dims"].as_array().unwrap();
    assert_eq!(dims.last().unwrap()["degree"], 12);
}

#[test]
fn hom_with_basis_lists_maps() {
    let v = json(&["hom", "--src", "X", "--dst", "1", "--max-degree", "2", "--basis"]);
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 1);
    assert_eq!(basis[0]["degree"], 2);
    assert_eq!(basis[0]["maps"][0]["blocks"][0][0]["entries"][0][0], "as - at");
}

#[test]
fn degree_bound_from_environment() {
    let out = bin().env("FOLD_SOERGEL_DEGREE_BOUND", "4").args(["hom", "--src", "1", "--dst", "1"]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["max_degree"], 4);
    assert_eq!(v["series"], "2v^4+v^2+1");
    let bad =
        bin().env("FOLD_SOERGEL_DEGREE_BOUND", "many").args(["hom", "--src", "1", "--dst", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn ring_and_specializations() {
    assert_eq!(json(&["ring", "Y*Y"])["normal_form"], "(v+v^-1)Y + Z + XZ");
    assert_eq!(json(&["ring", "Z*Z", "--specialize", "-1"])["normal_form"], "(v^2+v^-2)Z");
    assert_eq!(json(&["ring", "Y*Y", "--specialize", "+1"])["normal_form"], "(v+v^-1)Y + 2Z");
}

#[test]
fn decompose_words() {
    let v = json(&["decompose", "Y*Z"]);
    let s: Vec<(String, i64)> = v["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["object"].as_str().unwrap().to_string(), x["shift"].as_i64().unwrap()))
        .collect();
    let want = [("Z", -1), ("Z", 1), ("XZ", -1), ("XZ", 1)];
    assert_eq!(s, want.iter().map(|(a, b)| (a.to_string(), *b)).collect::<Vec<_>>());
}

#[test]
fn eval_reports_equivariant_map() {
    let v = json(&["eval", "merge_ggg . (dotd_g x id(Y))"]);
    assert_eq!(v["src"], "Y");
    assert_eq!(v["tgt"], "Y");
    assert_eq!(v["equivariant"], true);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let a = run(&["verify", "--workers", "1"]);
    let b = run(&["verify", "--workers", "4"]);
    assert_eq!(a, b);
    let a = run(&["hom", "--src", "YY", "--dst", "1", "--max-degree", "8", "--basis", "--workers", "1"]);
    let b = run(&["hom", "--src", "YY", "--dst", "1", "--max-degree", "8", "--basis", "--workers", "3"]);
    assert_eq!(a, b);
}
