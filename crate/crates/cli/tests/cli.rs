use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn wcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn wcomb_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wcomb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(out: Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn failure(out: Output, code: i32, kind: &str) -> Value {
    assert_eq!(out.status.code(), Some(code), "{}", String::from_utf8_lossy(&out.stdout));
    let err: Value = serde_json::from_slice(&out.stderr).expect("JSON on stderr");
    assert_eq!(err["kind"], kind);
    assert!(err["message"].as_str().is_some_and(|m| !m.is_empty()));
    err
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn parses_arrays_and_expressions() {
    // a single-form Wronskian echoes the form
    assert_eq!(coeffs(&ok(wcomb(&["wronskian", "[1,0,1]"]))), ["1", "0", "1"]);
    assert_eq!(coeffs(&ok(wcomb(&["wronskian", "x1^3 - x2^3"]))), ["1", "0", "0", "-1"]);
    assert_eq!(coeffs(&ok(wcomb(&["wronskian", "-x1^2 + 1/2*x1*x2"]))), ["-1", "1/2", "0"]);
    assert_eq!(
        coeffs(&ok(wcomb(&["wronskian", r#"{"order": 1, "coeffs": ["2/4", 3]}"#]))),
        ["1/2", "3"]
    );
    failure(wcomb(&["wronskian", "x1^2 + x2"]), 2, "parse");
    failure(wcomb(&["wronskian", "[0.5, 1]"]), 2, "parse");
    failure(wcomb(&["wronskian", ""]), 2, "parse");
}

#[test]
fn transvectant_examples() {
    let one = ok(wcomb(&["transvect", "x1^2", "x2^2", "2"]));
    assert_eq!(one, json!({"order": 0, "coeffs": ["1"]}));
    let w = ok(wcomb(&["transvect", "x1^3", "x2^3", "1"]));
    assert_eq!(coeffs(&w), ["0", "0", "1", "0", "0"]);
    let zero = ok(wcomb(&["transvect", "x1^2", "x2^3", "3"]));
    assert_eq!(zero, json!({"order": 0, "coeffs": ["0"]}));
}

#[test]
fn combinants_recover_round_trip() {
    let family = ok(wcomb(&["combinants", "x1^3", "x2^3"]));
    assert_eq!(family["r"], 2);
    assert_eq!(family["d"], 3);
    assert_eq!(coeffs(&family["components"]["0"]), ["0", "0", "1", "0", "0"]);
    assert_eq!(coeffs(&family["components"]["2"]), ["-1/6"]);
    assert!(family["components"].get("1").is_none());

    let text = family.to_string();
    let rec = ok(wcomb_stdin(&["recover", "-"], &text));
    assert_eq!(rec["k"], "1");
    assert_eq!(coeffs(&rec["subspace"][0]), ["1", "0", "0", "0"]);
    assert_eq!(coeffs(&rec["subspace"][1]), ["0", "0", "0", "1"]);

    let kernel = ok(wcomb_stdin(&["psi-kernel", "-"], &text));
    assert_eq!(kernel["kernel_dim"], 2);
    assert_eq!(kernel["rank"], 2);
    assert_eq!(kernel["in_image"], true);
}

#[test]
fn scaled_family_recovers_scalar() {
    let text = r#"{"r": 2, "d": 3, "components": {"0": [0, 0, 7, 0, 0], "2": ["-7/6"]}}"#;
    let rec = ok(wcomb_stdin(&["recover", "-"], text));
    assert_eq!(rec["k"], "7");
}

#[test]
fn family_files() {
    let dir = std::env::temp_dir().join(format!("wcomb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.json");
    let out = wcomb(&["combinants", "[1,2,0,-1,3]", "[0,1,4,1,-2]"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let rec = ok(wcomb(&["recover", path.to_str().unwrap()]));
    assert_eq!(rec["k"], "1");
    failure(wcomb(&["recover", dir.join("missing.json").to_str().unwrap()]), 3, "precondition");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn random_family_is_not_recovered() {
    let text = r#"{"r": 2, "d": 3, "components": {"0": [1, 2, 3, 4, 5], "2": [7]}}"#;
    let err = failure(wcomb_stdin(&["recover", "-"], text), 4, "verification");
    assert_eq!(err["code"], "not-in-image");
    let kernel = ok(wcomb_stdin(&["psi-kernel", "-"], text));
    assert_eq!(kernel["in_image"], false);
}

#[test]
fn malformed_families() {
    let missing = r#"{"r": 2, "d": 3, "components": {"0": [0, 0, 1, 0, 0]}}"#;
    failure(wcomb_stdin(&["recover", "-"], missing), 3, "precondition");
    let zero = r#"{"r": 2, "d": 3, "components": {"0": [0, 0, 0, 0, 0], "2": [0]}}"#;
    failure(wcomb_stdin(&["recover", "-"], zero), 3, "precondition");
    failure(wcomb_stdin(&["psi-kernel", "-"], "{"), 2, "parse");
}

#[test]
fn emitted_forms_reparse_identically() {
    for conv in [&[][..], &["--binomial"][..]] {
        let mut args = conv.to_vec();
        args.extend(["transvect", "x1^3 - 2*x1*x2^2", "3*x1^2*x2 - 1/2*x2^3", "1"]);
        let first = ok(wcomb(&args));
        let text = first.to_string();
        let mut again = conv.to_vec();
        again.extend(["wronskian", text.as_str()]);
        assert_eq!(ok(wcomb(&again)), first);
    }
}

#[test]
fn binomial_convention() {
    let raw = ok(wcomb(&["wronskian", "(x1 + x2)^2"]));
    assert_eq!(coeffs(&raw), ["1", "2", "1"]);
    let weighted = ok(wcomb(&["--binomial", "wronskian", "(x1 + x2)^2"]));
    assert_eq!(coeffs(&weighted), ["1", "1", "1"]);
    let back = ok(wcomb(&["--binomial", "wronskian", "[1,1,1]"]));
    assert_eq!(back, weighted);
}

#[test]
fn gamma_and_keyprop() {
    // r = 2: Gamma_1 = -B W(A_1, A_2)
    let g = ok(wcomb(&["gamma", "x1^2 + x2^2", "1", "x1^2", "x1*x2"]));
    let w = ok(wcomb(&["wronskian", "x1^2", "x1*x2"]));
    assert_eq!(coeffs(&w), ["1/2", "0", "0"]);
    assert_eq!(coeffs(&g), ["-1/2", "0", "-1/2", "0", "0"]);
    let g0 = ok(wcomb(&["gamma", "x1^2 + x2^2", "0", "x1^2", "x1*x2"]));
    assert!(coeffs(&g0).iter().all(|c| c == "0"));

    let report = ok(wcomb(&["verify-keyprop", "x1^3 - x2^3", "x1^3 + x1*x2^2", "x2^3", "x1^2*x2"]));
    assert_eq!(report, json!({"vanishing": true, "product": true, "jacobian": true, "all": true}));
    failure(wcomb(&["verify-keyprop", "x1", "x1^3", "x2^3"]), 3, "precondition");
}

#[test]
fn embed_points() {
    let p = ok(wcomb(&["embed", "x1^3", "x2^3"]));
    assert_eq!(p["point"], json!(["0", "0", "6", "0", "0", "-1"]));
    // same span, different basis
    let q = ok(wcomb(&["embed", "2*x1^3 + x2^3", "x1^3 - x2^3"]));
    assert_eq!(p["point"], q["point"]);
    let err = failure(wcomb(&["embed", "x1^3", "2*x1^3"]), 3, "precondition");
    assert_eq!(err["code"], "dependent-forms");
}

#[test]
fn precondition_errors() {
    failure(wcomb(&["wronskian", "x1^2", "x1^3"]), 3, "precondition");
    failure(wcomb(&["combinants", "x1", "x2", "x1 + x2"]), 3, "precondition");
    failure(wcomb(&["gamma", "x1", "2", "x1^2"]), 3, "precondition");
}

#[test]
fn usage_errors() {
    failure(wcomb(&["transvect", "x1", "x2", "one"]), 2, "parse");
    failure(wcomb(&["wronskian"]), 2, "parse");
    failure(wcomb(&["no-such-command"]), 2, "parse");
    failure(wcomb(&["verify-suite", "--suite", "nope", "--cases", "1"]), 2, "parse");
    assert!(wcomb(&["--help"]).status.success());
}

#[test]
fn verify_suite_is_deterministic() {
    let args = ["verify-suite", "--seed", "11", "--cases", "3", "--rmax", "3", "--dmax", "5"];
    let first = wcomb(&args);
    let second = wcomb(&args);
    assert_eq!(first.stdout, second.stdout);
    let report = ok(first);
    assert_eq!(report["passed"], true);
    let listed = ok(wcomb(&["verify-suite", "--list"]));
    assert_eq!(report["suites"].as_array().unwrap().len(), listed.as_array().unwrap().len());
}

#[test]
fn quintic_identity_reproduces() {
    let first = wcomb(&["quintic-identity", "--seed", "9"]);
    let second = wcomb(&["quintic-identity", "--seed", "9"]);
    assert_eq!(first.stdout, second.stdout);
    let report = ok(first);
    assert_eq!(report["coefficients"], json!(["50", "-15", "-40"]));
    assert_eq!(report["matches"], true);
    let other = ok(wcomb(&["quintic-identity", "--seed", "10"]));
    assert_ne!(other["forms"], report["forms"]);
    assert_eq!(other["coefficients"], report["coefficients"]);
}
