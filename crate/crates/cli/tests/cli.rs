use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn examples_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn fixture(name: &str) -> String {
    examples_dir().join(name).display().to_string()
}

fn sb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superbracket"))
        .args(args)
        .env_remove("SUPERBRACKET_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name} in {report}"))
}

#[test]
fn fixtures_reproduce_their_expected_reports() {
    let mut seen = 0;
    for entry in fs::read_dir(examples_dir().join("expected")).unwrap() {
        let path = entry.unwrap().path();
        let stem = path.file_name().unwrap().to_str().unwrap().trim_end_matches(".json").to_string();
        let (file, kind) = stem.rsplit_once('.').unwrap();
        let out = sb(&["--stable", "verify", &fixture(&format!("{file}.json")), "--kind", kind]);
        let expected = fs::read(&path).unwrap();
        assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&expected), "{stem}");
        let code = if file == "non_jacobi" { 1 } else { 0 };
        assert_eq!(out.status.code(), Some(code), "{stem}");
        seen += 1;
    }
    assert!(seen >= 20);
}

#[test]
fn verify_ex1_1_n2_passes() {
    let out = sb(&["verify", &fixture("ex1_1_n2.json"), "--kind", "lie"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r["timing_ms"].is_u64());
    assert_eq!(check(&r, "quasi_classical")["verdict"], "pass");
}

#[test]
fn corrupted_file_is_an_input_error() {
    let out = sb(&["verify", &fixture("corrupted.json"), "--kind", "lie"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("corrupted.json") && err.contains("line"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_file_is_an_input_error() {
    assert_eq!(sb(&["verify", "/nonexistent/x.json", "--kind", "lie"]).status.code(), Some(2));
}

#[test]
fn non_jacobi_table_lists_the_violating_triple() {
    let out = sb(&["verify", &fixture("non_jacobi.json"), "--kind", "lie"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let jacobi = check(&r, "jacobi");
    assert_eq!(jacobi["verdict"], "fail");
    let at = &jacobi["details"]["first"][0]["at"];
    assert_eq!(at.as_array().unwrap().len(), 3);
    assert_eq!(check(&r, "super_antisymmetry")["verdict"], "pass");
}

#[test]
fn example_ex1_3_dimension_oracle() {
    let dir = tempfile::tempdir().unwrap();
    for (n, m) in [(2, 1), (1, 2), (3, 1)] {
        let out_path = dir.path().join(format!("ex1_3_{n}_{m}.json"));
        let out = sb(&["example", "ex1_3", "--n", &n.to_string(), "--m", &m.to_string(), "--out", out_path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(check(&report(&out), "dimension")["details"], 2 * n + 2 * m + n * m);
        let written: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
        assert_eq!(written["basis"].as_array().unwrap().len(), 2 * n + 2 * m + n * m);
        assert_eq!(sb(&["verify", out_path.to_str().unwrap(), "--kind", "lie"]).status.code(), Some(0));
    }
}

#[test]
fn example_ex1_1_matches_the_shipped_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("a.json");
    let out = sb(&["example", "ex1_1", "--n", "1", "--lambda", "0", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read(&out_path).unwrap(), fs::read(fixture("ex1_1_n1.json")).unwrap());
}

#[test]
fn example_rejects_odd_n_for_ex1_2() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("x.json");
    let out = sb(&["example", "ex1_2", "--n", "3", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out_path.exists());
}

#[test]
fn unknown_arguments_are_usage_errors() {
    assert_eq!(sb(&["verify"]).status.code(), Some(2));
    assert_eq!(sb(&["ybe", "--family", "prop9"]).status.code(), Some(2));
    assert_eq!(sb(&["ybe", "--family", "prop3_1", "--base", "ex1_1"]).status.code(), Some(2));
}

fn form_space_dimension(file: &str) -> u64 {
    let out = sb(&["forms", &fixture(file)]);
    assert_eq!(out.status.code(), Some(0));
    check(&report(&out), "form_space")["details"]["dimension"].as_u64().unwrap()
}

#[test]
fn forms_dimensions() {
    assert_eq!(form_space_dimension("abelian2.json"), 3);
    assert_eq!(form_space_dimension("simple3.json"), 1);
    assert!(form_space_dimension("ex1_1_n1.json") >= 2);
    let r = report(&sb(&["forms", &fixture("ex1_1_n1.json")]));
    assert!(!check(&r, "nondegenerate_sample")["details"]["found"].is_null());
}

#[test]
fn casimir_needs_a_form() {
    assert_eq!(sb(&["casimir", &fixture("abelian2.json")]).status.code(), Some(2));
    let out = sb(&["casimir", &fixture("ex1_1_n1_lambda2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let coeffs = check(&report(&out), "casimir")["details"]["coefficients"].clone();
    assert!(coeffs
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["left"] == "e" && c["right"] == "e" && c["value"] == "2"));
}

#[test]
fn series_reports_nilpotency() {
    let r = report(&sb(&["series", &fixture("ex1_3_n1_m1.json")]));
    assert_eq!(check(&r, "nilpotent")["details"]["length"], 3);
    let r = report(&sb(&["series", &fixture("ex1_1_n1.json")]));
    assert_eq!(check(&r, "nilpotent")["details"]["nilpotent"], false);
    assert_eq!(check(&r, "derived_condition")["details"]["holds"], true);
}

#[test]
fn embed_orthogonal_triple() {
    let dir = tempfile::tempdir().unwrap();
    let out = sb(&["embed", &fixture("ex2_1_3_0.json"), "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(check(&r, "dimensions")["details"]["l0"], 6);
    for f in ["l0.json", "m.json"] {
        let path = dir.path().join(f);
        assert_eq!(sb(&["verify", path.to_str().unwrap(), "--kind", "lie"]).status.code(), Some(0), "{f}");
    }
}

#[test]
fn embed_zero_triple_is_abelian() {
    let dir = tempfile::tempdir().unwrap();
    let out = sb(&["embed", &fixture("zero_triple.json"), "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(check(&r, "dimensions")["details"]["l0"], 2);
    assert_eq!(check(&r, "dimensions")["details"]["m"], 0);
    let l0: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("l0.json")).unwrap()).unwrap();
    assert!(l0["brackets"].as_array().unwrap().is_empty());
    assert!(!dir.path().join("m.json").exists());
}

#[test]
fn embed_refuses_anti_lie_systems() {
    let out = sb(&["embed", &fixture("ex2_1_2_0_anti.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("δ = -1"));
}

#[test]
fn fk_reads_lie_triples() {
    let out = sb(&["fk", &fixture("ex2_3_ex1_1.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(check(&report(&out), "fk_identity")["verdict"], "pass");
    let out = sb(&["fk", &fixture("ex2_1_0_3_anti.json"), "--epsilon", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sb(&["fk", &fixture("ex2_1_0_3_anti.json"), "--epsilon", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(sb(&["verify", &fixture("ex2_1_3_0.json"), "--kind", "fk"]).status.code(), Some(2));
}

#[test]
fn jordan_lie_of_involution_jordan() {
    let dir = tempfile::tempdir().unwrap();
    let (alg, tri) = (dir.path().join("m.json"), dir.path().join("t.json"));
    let out = sb(&[
        "jordan-lie",
        &fixture("ex2_4_2_2.json"),
        "--out-algebra",
        alg.to_str().unwrap(),
        "--out-triple",
        tri.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let built: Value = serde_json::from_str(&fs::read_to_string(&tri).unwrap()).unwrap();
    let ex2_2: Value = serde_json::from_str(&fs::read_to_string(fixture("ex2_2_2_2.json")).unwrap()).unwrap();
    assert_eq!(built["triples"], ex2_2["triples"]);
    assert_eq!(sb(&["verify", alg.to_str().unwrap(), "--kind", "lie"]).status.code(), Some(0));
}

#[test]
fn ybe_left_nested_family_passes() {
    let out = sb(&["ybe", "--family", "prop3_1", "--base", "ex1_1:n=1", "--f", "0,1", "--g", "1", "--check", "ybe"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(check(&r, "ybe")["details"]["points_checked"], 16);
}

#[test]
fn ybe_commuting_diagonals_pass() {
    let out = sb(&[
        "ybe",
        "--family",
        "remark3_2",
        "--diagonals",
        "1,2;3,-1",
        "--coeffs",
        "0,1;1|1;0,0,1",
        "--check",
        "ybe",
        "--check",
        "commute",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ybe_simple3_fails_with_first_grid_point() {
    let out = sb(&["ybe", "--family", "prop3_1", "--base", "simple3", "--f", "0,1", "--g", "1", "--check", "ybe"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(check(&r, "hypotheses")["verdict"], "fail");
    let failure = &check(&r, "ybe")["details"]["first_failure"];
    assert_eq!(failure["point"].as_array().unwrap().len(), 3);
    assert_ne!(failure["lhs"], failure["rhs"]);
}

#[test]
fn ybe_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = sb(&[
        "--stable", "ybe", "--family", "prop3_2", "--base", "ex1_3", "--f1", "0,1", "--f2", "1", "--g", "1", "--export",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read(&path).unwrap(), fs::read(fixture("r_prop3_2_ex1_3.json")).unwrap());
    assert_eq!(sb(&["verify", path.to_str().unwrap(), "--kind", "rmatrix"]).status.code(), Some(0));
}

#[test]
fn dimension_guard_is_configurable() {
    let run = |max: &str| {
        Command::new(env!("CARGO_BIN_EXE_superbracket"))
            .args(["verify", &fixture("ex2_1_3_0.json"), "--kind", "triple"])
            .env("SUPERBRACKET_MAX_DIM", max)
            .output()
            .unwrap()
    };
    assert_eq!(run("2").status.code(), Some(2));
    assert_eq!(run("3").status.code(), Some(0));
}

#[test]
fn human_output_is_a_table() {
    let out = sb(&["--human", "--stable", "verify", &fixture("simple3.json"), "--kind", "lie"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("verify simple3"));
    assert!(text.trim_end().ends_with("overall: PASS"));
}

#[test]
fn stable_reports_are_byte_identical() {
    let args = ["--stable", "ybe", "--family", "prop3_1", "--base", "ex1_1:n=1", "--f", "0,1", "--g", "1", "--check", "eq3_8"];
    assert_eq!(sb(&args).stdout, sb(&args).stdout);
    let args = ["--stable", "forms", &fixture("ex1_3_n1_m1.json")];
    assert_eq!(sb(&args).stdout, sb(&args).stdout);
}
