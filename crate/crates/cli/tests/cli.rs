use std::process::{Command, Output};

use serde_json::Value;

fn envlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_envlat"))
        .args(args)
        .env_remove("ENVLAT_CAP_WEYL")
        .env_remove("ENVLAT_CAP_RANK")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn lattice_dot_for_a2() {
    let out = envlat(&["lattice", "A2", "--dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 16);
    assert_eq!(dot.matches("[label=").count(), 11);
    assert!(dot.contains("\"e{|}\""));
}

#[test]
fn lattice_json_for_a2() {
    let out = envlat(&["lattice", "A2", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "envlat/1");
    assert_eq!(v["elements"].as_array().unwrap().len(), 11);
    assert_eq!(v["elements"][6]["I"], serde_json::json!([1, 2]));
    assert_eq!(v["elements"][6]["J"], serde_json::json!([]));
}

#[test]
fn output_is_deterministic() {
    let a = envlat(&["classify", "B3"]);
    let b = envlat(&["classify", "B3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn count_all_with_check() {
    let out = envlat(&["count", "--max-n", "5", "--method", "all", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let d: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["d"].as_u64().unwrap())
        .collect();
    assert_eq!(d, [1, 3, 11, 41, 151, 553]);
}

#[test]
fn count_large_values_are_exact_integers() {
    let out = envlat(&["count", "--max-n", "40", "--method", "gf"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rec = envlat(&["count", "--max-n", "40", "--method", "rec"]);
    let last_d = |t: &str| {
        let v: Value = serde_json::from_str(t).unwrap();
        v["rows"][40]["d"].to_string()
    };
    assert_eq!(
        last_d(&text),
        last_d(&String::from_utf8(rec.stdout).unwrap())
    );
    assert!(!last_d(&text).contains('"'));
}

#[test]
fn invalid_diagram_is_an_argument_error() {
    let out = envlat(&["lattice", "D3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("D"));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_flags_are_argument_errors() {
    assert_eq!(envlat(&["lattice"]).status.code(), Some(1));
    assert_eq!(envlat(&["count", "--max-n", "x"]).status.code(), Some(1));
    assert_eq!(envlat(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_element_spec() {
    let out = envlat(&["classify", "A2", "--element", "I=;J=1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_single_element() {
    let out = envlat(&["classify", "A2", "--element", "I=1;J=1,2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rec = &v["elements"][0];
    assert_eq!(rec["class"], "maximal_j_coirreducible");
    assert_eq!(rec["jlinear"], true);
    assert_eq!(rec["navel"], false);
    assert_eq!(rec["descriptor"]["unit_of_eme"]["torus"], 1);
}

#[test]
fn caps_refuse_with_exit_three() {
    assert_eq!(envlat(&["lattice", "A13"]).status.code(), Some(3));
    assert_eq!(
        envlat(&["--cap-rank", "2", "lattice", "A3"]).status.code(),
        Some(3)
    );
    assert_eq!(
        envlat(&["renner", "r1count", "A3", "--cap-weyl", "10"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn flags_override_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_envlat"))
        .args(["--cap-rank", "3", "lattice", "A3"])
        .env("ENVLAT_CAP_RANK", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_envlat"))
        .args(["lattice", "A3"])
        .env("ENVLAT_CAP_RANK", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn renner_commands() {
    let out = envlat(&["renner", "r1count", "A3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["count"], 71);
    assert_eq!(v["direct"], 71);

    let out = envlat(&["renner", "rank1", "A2", "--s", "1"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("[label=").count(), 9);

    let out = envlat(&["renner", "rank1", "A2", "--s", "1", "--full-j"]);
    assert_eq!(
        String::from_utf8(out.stdout)
            .unwrap()
            .matches("[label=")
            .count(),
        1
    );

    assert_eq!(envlat(&["renner", "r1count", "A1"]).status.code(), Some(1));
    assert_eq!(
        envlat(&["renner", "rank1", "A2", "--s", "3"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_passes_on_small_diagrams() {
    let out = envlat(&["verify", "all", "--max-rank", "3"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["reports"].as_array().unwrap().len() >= 7);
}

#[test]
fn verify_single_diagram_reports_leaf_diagnostic() {
    let out = envlat(&["verify", "A3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    let leaf = checks
        .iter()
        .find(|c| c["name"] == "jlinear_leaf_criterion")
        .unwrap();
    assert_eq!(leaf["diagnostic"], true);
    assert_eq!(leaf["passed"], false);
}
