use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compshuffle"))
        .args(args)
        .env_remove("SHUFFLE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn zeta_of_running_example() {
    let v = json(&["zeta", "--path", "NENNNENNEEEENNEE"]);
    assert_eq!(v["image"]["bounce_seq"], serde_json::json!([0, 0, 0, 1, 1, 2, 2, 3]));
    assert_eq!(v["image"]["area"], 8);
    assert_eq!(v["image"]["bounce"], 9);
}

#[test]
fn stats_wire_format() {
    let v = json(&["stats", "--path", "NNEENE"]);
    assert_eq!(v["path"], "NNEENE");
    assert_eq!(v["area"], 1);
    assert_eq!(v["touch"], serde_json::json!([2, 1]));
    assert_eq!(json(&["stats", "--n", "4"]).as_array().unwrap().len(), 14);
}

#[test]
fn dalpha_methods_agree() {
    let dinv = json(&["dalpha", "--alpha", "1,2"]);
    for m in ["bounce", "operator", "both"] {
        assert_eq!(json(&["dalpha", "--alpha", "1,2", "--method", m]), dinv, "{m}");
    }
    let text = run(&["dalpha", "--alpha", "1,2", "--format", "text"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap().trim(), "(t)*s[2,1] + (q*t)*s[1,1,1]");
}

#[test]
fn nalpha_schema() {
    let v = json(&["nalpha", "--alpha", "3,1"]);
    assert_eq!(v["k"], 2);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 2);
    assert!(coeffs.iter().all(|c| c.get("partition").is_some() && c.get("yexp").is_some() && c.get("value").is_some()));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = run(&["verify", "shuffle", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "shuffle");
    assert_eq!(v["params"]["n"], 1);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["pass"] == true && r["instances"] == 1));
    assert!(v["counterexample"].is_null());

    // identical flags, identical report
    let a = run(&["verify", "words", "--n", "4", "--jobs", "3"]);
    let b = run(&["verify", "words", "--n", "4", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);

    assert_eq!(run(&["verify", "relations", "--suite", "dpa,star", "--k", "1", "--deg", "2"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "relations", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["dalpha", "--alpha", "1,0"],
        &["stats", "--path", "ENNE"],
        &["stats"],
        &["chi", "--weight", "mu"],
        &["chi", "--weight", "mu", "--mu", "2,1", "--path", "NE"],
        &["dalpha", "--alpha", "11"],
        &["nabla", "--input", "/nonexistent/f.json"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn macdonald_cache_does_not_change_values() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = json(&["macdonald", "--mu", "2,2"]);
    let cold = json(&["macdonald", "--mu", "2,2", "--cache-dir", cache]);
    assert!(dir.path().join("H_n4.json").exists());
    let warm = json(&["macdonald", "--mu", "2,2", "--cache-dir", cache]);
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);

    std::fs::write(dir.path().join("H_n4.json"), "{ not json").unwrap();
    assert_eq!(json(&["macdonald", "--mu", "2,2", "--cache-dir", cache]), plain);

    let env = Command::new(env!("CARGO_BIN_EXE_compshuffle"))
        .args(["macdonald", "--mu", "3"])
        .env("SHUFFLE_CACHE_DIR", cache)
        .output()
        .unwrap();
    assert!(env.status.success());
    assert!(dir.path().join("H_n3.json").exists());
}

#[test]
fn nabla_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("e2.json");
    std::fs::write(&input, r#"{"basis":"e","coeffs":[{"partition":[2],"value":{"vars":["q","t"],"terms":[{"exp":[0,0],"coeff":"1"}]}}]}"#)
        .unwrap();
    let out = run(&["nabla", "--input", input.to_str().unwrap(), "--format", "text"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "s[2] + (q + t)*s[1,1]");
}

#[test]
fn chi_weights() {
    let one = run(&["chi", "--path", "NNEENE", "--format", "text"]);
    assert_eq!(String::from_utf8(one.stdout).unwrap().trim(), "s[3] + (q + 1)*s[2,1] + (q)*s[1,1,1]");
    let zero = run(&["chi", "--path", "NNEENE", "--weight", "0", "--format", "text"]);
    assert_eq!(String::from_utf8(zero.stdout).unwrap().trim(), "s[2,1] + (q)*s[1,1,1]");
    let m = json(&["chi", "--path", "NNENEE", "--basis", "m"]);
    assert_eq!(m["basis"], "m");
}
