//! End-to-end checks of the binary: outputs, formats, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter-cosets"))
        .args(args)
        .env_remove("COXETER_COSETS_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn cw_prints_the_count() {
    let out = run(&["cw", "7", "1", "2", "3", "5", "4", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "144");
    // Compact digit form accepted for n <= 9.
    let compact = run(&["cw", "7123546"]);
    assert_eq!(stdout(&compact).trim(), "144");
}

#[test]
fn pn_and_named_forms() {
    assert_eq!(stdout(&run(&["pn", "5"])).trim(), "1791");
    assert_eq!(stdout(&run(&["pn", "4", "--oracle"])).trim(), "167");
    assert_eq!(stdout(&run(&["branch", "2", "2", "2"])).trim(), "2378");
    assert_eq!(stdout(&run(&["circular", "4"])).trim(), "332");
    assert_eq!(stdout(&run(&["contingency", "4"])).trim(), "281");
    assert_eq!(stdout(&run(&["expected-tethers", "5"])).trim(), "1/30");
}

#[test]
fn cw_identity_over_families() {
    let out = run(&["cw", "--identity", "--family", "star", "--rank", "4"]);
    assert_eq!(stdout(&out).trim(), "72");
    let affine = run(&["cw", "--identity", "--family", "affineD", "--rank", "5"]);
    assert_eq!(stdout(&affine).trim(), "814");
}

#[test]
fn json_big_counts_round_trip() {
    let out = run(&[
        "cw", "1", "2", "17", "18", "3", "4", "19", "20", "5", "6", "21", "22", "7", "8", "23",
        "24", "9", "10", "25", "26", "11", "12", "27", "28", "13", "14", "29", "30", "15", "16",
        "31", "32", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let c_w: num_bigint::BigUint = parsed["c_w"].as_str().unwrap().parse().unwrap();
    assert_eq!(c_w.to_string(), "632371867544102");
    assert_eq!(parsed["tethers"].as_array().unwrap().len(), 22);
}

#[test]
fn ocean_dot_output() {
    let out = run(&["ocean", "7123546", "--model", "--format", "dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("graph ocean {"));
    assert!(text.contains("dashed"));
}

#[test]
fn lexmin_reduction() {
    let out = run(&["lexmin", "1234", "--I", "1,2,3", "--J", "1,2,3"]);
    let text = stdout(&out);
    assert!(text.contains("lex-minimal: false"));
    assert!(text.contains("I = {}, J = {1,2,3}"));
}

#[test]
fn seq_families() {
    let out = run(&["seq", "a2p", "0..4", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.contains("a2p,4,119"));
    let pair = run(&["seq", "pair:both-run-top:both-run-bot", "5"]);
    assert_eq!(stdout(&pair).trim(), "5\t77");
    let b = run(&["seq", "b:0,01,01,0", "6"]);
    assert_eq!(stdout(&b).trim(), "6\t3732");
}

#[test]
fn doubled_graph_output() {
    let out = run(&["doubled", "13425"]);
    let text = stdout(&out);
    assert!(text.contains("avoid left:  R1 R4"));
    assert!(text.contains("avoid right: L1 L4"));
}

#[test]
fn graph_file_and_profile_inputs() {
    let dir = std::env::temp_dir().join(format!("coxcosets-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("d4.graph");
    std::fs::write(
        &graph_path,
        "v 1\nv 2\nv 3\nv 4\ne 1 2 3\ne 1 3 3\ne 1 4 3\n",
    )
    .unwrap();
    let out = run(&["cw", "--identity", "--graph", graph_path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "72");

    let profile_path = dir.join("e.profile.json");
    std::fs::write(
        &profile_path,
        r#"{"graph":"v 1\nv 2\nv 3\ne 1 2 3\ne 2 3 3\n","leftAscents":[0,1,2],"rightAscents":[0,1,2],"smallMap":{"0":0,"1":1,"2":2}}"#,
    )
    .unwrap();
    let out = run(&["cw", "--profile", profile_path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "20");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes_are_distinct() {
    // Malformed permutation: 3.
    let bad_perm = run(&["cw", "1", "1"]);
    assert_eq!(bad_perm.status.code(), Some(3));
    // Oracle bound exceeded: 4.
    let bound = run(&["pn", "7", "--oracle", "--max-n", "6"]);
    assert_eq!(bound.status.code(), Some(4));
    // Unknown subcommand: clap's usage error.
    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    // Successful verification: 0.
    let verify = run(&["verify", "--n", "3"]);
    assert_eq!(verify.status.code(), Some(0));
    let text = stdout(&verify);
    assert!(text.contains("[pass] formula-vs-oracle"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn env_var_overrides_bound() {
    let out = Command::new(env!("CARGO_BIN_EXE_coxeter-cosets"))
        .args(["pn", "4", "--oracle"])
        .env("COXETER_COSETS_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
