use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn rigidkit(args: &[&str]) -> (i32, String, String) {
    rigidkit_with_stdin(args, "")
}

fn rigidkit_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rigidkit"))
        .args(args)
        .env_remove("RIGIDKIT_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn independent_k66_minus() {
    let (code, out, _) = rigidkit(&["independent", "--gallery", "k66minus", "--d", "3"]);
    assert_eq!(code, 0);
    let v = &lines(&out)[0];
    assert_eq!(v["independent"], true);
    assert_eq!(v["rank"], 30);
}

#[test]
fn sparsity_k55_reports_a_witness() {
    let (code, out, _) = rigidkit(&["sparsity", "--gallery", "k55"]);
    assert_eq!(code, 0);
    let v = &lines(&out)[0];
    assert_eq!(v["sparse"], false);
    assert!(!v["witness"].as_array().unwrap().is_empty());
}

#[test]
fn reduce_octahedron_gives_a_certificate_that_verifies() {
    let (code, out, _) = rigidkit(&["reduce", "--gallery", "octahedron", "--moves"]);
    assert_eq!(code, 0);
    let v = &lines(&out)[0];
    assert_eq!(v["certified"], true);
    assert_eq!(v["certificate"]["steps"].as_array().unwrap().len(), 1);
    assert!(!v["moves"].as_array().unwrap().is_empty());

    let dir = std::env::temp_dir().join(format!("rigidkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("oct.json");
    std::fs::write(&cert, out.lines().next().unwrap()).unwrap();
    let c = cert.to_str().unwrap();
    let (code, out, _) = rigidkit(&["verify-cert", "--cert", c, "--gallery", "octahedron"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(lines(&out)[0]["valid"], true);
    // against a different graph the certificate is rejected
    let (code, out, _) = rigidkit(&["verify-cert", "--cert", c, "--gallery", "k66minus"]);
    assert_eq!(code, 1);
    assert_eq!(lines(&out)[0]["valid"], false);
    // tampering with the base graph is detected
    let mut tampered: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    tampered["certificate"]["base"]["graph6"] = Value::from("D~{");
    std::fs::write(&cert, tampered.to_string()).unwrap();
    let (code, _, _) = rigidkit(&["verify-cert", "--cert", c]);
    assert_eq!(code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reduce_on_dependent_graph_is_not_a_failure() {
    let (code, out, _) = rigidkit(&["reduce", "--gallery", "double-banana"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[0]["certified"], false);
}

#[test]
fn input_file_and_stdin() {
    let (code, out, _) =
        rigidkit_with_stdin(&["rank", "--input", "-", "--d", "2"], "Bw\nC~\n\nD~{\n");
    assert_eq!(code, 0);
    let ranks: Vec<i64> = lines(&out).iter().map(|v| v["rank"].as_i64().unwrap()).collect();
    assert_eq!(ranks, vec![3, 5, 7]);
}

#[test]
fn json_flag_emits_one_array() {
    let (code, out, _) = rigidkit_with_stdin(&["circuit", "--input", "-", "--json"], "D~{\nC~\n");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0]["circuit"], true);
    assert_eq!(arr[1]["circuit"], false);
}

#[test]
fn malformed_input_exits_one_and_continues() {
    let (code, out, _) = rigidkit_with_stdin(&["independent", "--input", "-"], "D~\nC~\n");
    assert_eq!(code, 1);
    let v = lines(&out);
    assert!(v[0]["error"].as_str().unwrap().contains("malformed"));
    assert_eq!(v[1]["independent"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["rank", "--d", "7", "--gallery", "k5"],
        &["rank"],
        &["ksets", "--gallery", "k66minus", "--d", "2"],
        &["independent", "--gallery", "nonesuch"],
        &["rank", "--gallery", "k5", "--trials", "0"],
        &["rank", "--gallery", "k5", "--input", "x.g6"],
    ] {
        let (code, _, err) = rigidkit(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn seed_from_environment() {
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_rigidkit"))
            .args(["rank", "--gallery", "k66minus"])
            .env("RIGIDKIT_SEED", seed)
            .output()
            .unwrap();
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v["detail"]["seed"].as_str().unwrap().to_string()
    };
    assert_eq!(run("12345"), "12345");
    assert_eq!(run("0x10"), "16");
}

#[test]
fn ksets_cores_and_audit() {
    let (code, out, _) = rigidkit(&["ksets", "--gallery", "double-banana", "--k-max", "6", "--min-size", "4"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[0]["count"], 7);
    let (code, out, _) = rigidkit(&["ksets", "--gallery", "k66minus", "--audit"]);
    assert_eq!(code, 0);
    assert!(lines(&out)[0]["audit"]["violations"].as_array().unwrap().is_empty());
    let (code, out, _) = rigidkit(&["cores", "--gallery", "double-banana"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[0]["maximal_proper_cores"].as_array().unwrap().len(), 2);
}

#[test]
fn gallery_subcommands() {
    let (code, out, _) = rigidkit(&["gallery", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "k66minus"));
    let (code, out, _) = rigidkit(&["gallery", "check", "k66minus", "k_d2_d2(4)"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    let (code, _, _) = rigidkit(&["gallery", "check", "nonesuch"]);
    assert_eq!(code, 1);
}

#[test]
fn batch_from_stdin() {
    let text = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/conn5reg_n12.g6"),
    )
    .unwrap();
    let head: String = text.lines().take(200).map(|l| format!("{l}\n")).collect();
    let (code, out, _) = rigidkit_with_stdin(&["batch", "--input", "-", "--jobs", "2"], &head);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["input_count"], 200);
    assert_eq!(v["schema"], 1);
    let (code, _, _) = rigidkit_with_stdin(&["batch", "--input", "-", "--expect", "7848"], &head);
    assert_eq!(code, 1);
}

#[test]
fn batch_with_missing_geng_fails_cleanly() {
    let out = Command::new(env!("CARGO_BIN_EXE_rigidkit"))
        .args(["batch", "--geng", "8"])
        .env("RIGIDKIT_GENG", "/nonexistent/geng")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
