use std::process::{Command, Output};

use qshuffle::Rf;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let o = run(&a);
    serde_json::from_str(&stdout(&o)).expect("valid json")
}

#[test]
fn fo_product_of_units() {
    let o = run(&["shuffle", "fo", "--k", "1", "--l", "1", "--f", "1", "--g", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn monopole_rank_two() {
    let o = run(&["gklo", "monopole", "--N", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.last(), Some(&"PASS"));
    assert!(lines[0].contains("u1^-1") && lines[0].contains("u2^-1"));
}

#[test]
fn verify_all_rank_two() {
    let o = run(&["verify", "all", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn failed_check_exits_one() {
    let o = run(&["perm", "idem", "--k", "3", "--sign", "minus"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).trim_end().ends_with("FAIL"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["shuffle", "fo", "--bogus"]).status.code(), Some(2));
    let o = run(&["shuffle", "fo", "--k", "1", "--l", "1", "--f", "1+", "--g", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    let o = run(&["--json", "shuffle", "fo", "--k", "2", "--l", "1", "--f", "Y1", "--g", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).expect("json error document");
    assert!(v.get("error").is_some());
    assert_eq!(run(&["verify", "all", "--N", "9"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_and_reparses() {
    let args = ["shuffle", "hecke", "--k", "1", "--l", "1", "--f", "Y1", "--g", "1"];
    let a = json(&args);
    assert_eq!(a, json(&args));
    let p = a["product"].as_str().expect("product string");
    assert_eq!(Rf::parse(p).unwrap().to_string(), p);

    let m = json(&["gklo", "monopole", "--N", "2", "--k", "1"]);
    assert_eq!(m["pass"], Value::Bool(true));
    assert_eq!(m["computed"], m["predicted"]);

    let v = json(&["verify", "all", "--N", "1"]);
    assert_eq!(v["pass"], Value::Bool(true));
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}
