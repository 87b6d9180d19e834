use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycweight")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn a2_ternary_example() {
    let v = json(&["a2", "--p", "3", "--m", "2", "--exps", "1,5"]);
    assert_eq!(v["result"]["A_2"], "8");
    assert_eq!(v["result"]["D"], 2);
    assert_eq!(v["field"]["modulus"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["method"], "formula");
}

#[test]
fn a3_c1t_example() {
    let v = json(&["a3-c1t", "--m", "4", "--t", "7"]);
    assert_eq!(v["result"]["A_3"], "5");
    assert_eq!(v["result"]["gcd_degree"], 4);
    assert_eq!(v["result"]["gcd"], "x^4 + x");
}

#[test]
fn family_example() {
    let v = json(&["family", "--f", "2", "--k", "2"]);
    let a: Vec<&str> = v["result"]["A"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(a, ["1", "0", "0", "0", "0", "186", "806"]);
    assert_eq!(v["result"]["N_2..N_W"][3], "36736");
}

#[test]
fn schema_and_key_order_are_stable() {
    let args = ["brute-weights", "--m", "4", "--exps", "3,1", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["field", "code", "result", "method"]);
    assert_eq!(v["code"]["exponents"], serde_json::json!([3, 1]));
    assert_eq!(v["method"], "bruteforce");
}

#[test]
fn exponents_are_canonicalized() {
    let v = json(&["a2", "--m", "4", "--exps", "6,2"]);
    assert_eq!(v["code"]["exponents"], serde_json::json!([3, 1]));
}

#[test]
fn bch_counts_and_inversion() {
    let v = json(&["nw", "--m", "4", "--weights", "1,0,0,0,0", "--w", "3"]);
    assert_eq!(v["result"]["N_w"], "46");
    let v = json(&["brute-nw", "--m", "4", "--exps", "1,2,3,4", "--w", "3"]);
    assert_eq!(v["result"]["N_w"], "46");
    let v = json(&["invert", "--m", "5", "--nw", "32,94,3008,36736,1175552"]);
    assert_eq!(v["result"]["A"][5], "186");
    assert_eq!(v["result"]["A"][6], "806");
}

#[test]
fn verify_passes_on_consistent_codes() {
    for exps in ["1,7", "1,3", "0,1"] {
        let v = json(&["verify", "--m", "4", "--exps", exps]);
        assert_eq!(v["result"]["all_agree"], true, "{exps}");
    }
    let v = json(&["verify", "--p", "3", "--m", "2", "--exps", "1,5"]);
    assert_eq!(v["result"]["all_agree"], true);
}

#[test]
fn exit_codes() {
    // usage error
    assert_eq!(run(&["a2", "--m", "4"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    // validation errors
    let out = run(&["invert", "--m", "5", "--nw", "33"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an integer"));
    assert_eq!(run(&["a2", "--p", "4", "--m", "2", "--exps", "1"]).status.code(), Some(3));
    assert_eq!(run(&["a2", "--m", "4", "--exps", "1,2"]).status.code(), Some(3));
    assert_eq!(run(&["a3-c1t", "--m", "4", "--t", "2"]).status.code(), Some(3));
    assert_eq!(run(&["a2", "--m", "4", "--modulus", "1,1,1,1,1", "--exps", "1"]).status.code(), Some(3));
    // budget exhaustion
    assert_eq!(run(&["brute-nw", "--m", "5", "--exps", "1,5", "--w", "6", "--budget", "1000"]).status.code(), Some(4));
}

#[test]
fn modulus_override_is_reported() {
    let v = json(&["a2", "--m", "4", "--modulus", "1,0,0,1,1", "--exps", "1,7"]);
    assert_eq!(v["field"]["modulus"], serde_json::json!([1, 0, 0, 1, 1]));
}

#[test]
fn table_output() {
    let out = run(&["a2", "--p", "3", "--m", "2", "--exps", "1,5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("modulus x^2 + x + 2"), "{text}");
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["A_2", "8"]), "{text}");
}

#[test]
fn easy_criterion_and_witnesses() {
    let v = json(&["no-w3", "--m", "31", "--t", "33"]);
    assert_eq!(v["result"]["no_weight_3"], true);
    let v = json(&["a3-bound", "--p", "5", "--m", "2", "--g", "1", "--t", "1", "--exps", "1,9", "--witnesses"]);
    assert_eq!(v["result"]["A_3_lower_bound"], "288");
    let words: Vec<&str> =
        v["result"]["witnesses"].as_array().unwrap().iter().map(|w| w["codeword"].as_str().unwrap()).collect();
    assert!(words.contains(&"1 + 3x^6 + x^18"), "{words:?}");
}
