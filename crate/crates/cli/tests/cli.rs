use std::path::PathBuf;
use std::process::Command;

use btcompact::json::{datum_from_json, datum_json, point_from_json};
use btcompact::rootdata::RootDatum;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_btcompact")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).unwrap()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("btcompact-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn documented_examples() {
    assert_eq!(run_json(&["fan", "--datum", "A2", "--J", "a1"])["cone_count"], 7);
    assert_eq!(run_json(&["strata", "--datum", "A2", "--J", ""]).as_array().unwrap().len(), 4);
    assert_eq!(
        run_json(&["special", "--datum", "A1", "--gamma", "1", "--point", "1/3"]),
        serde_json::json!({"special": false, "witness": 3})
    );
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["fan", "--datum", "Z5"]).0, 2);
    assert_eq!(run(&["fan", "--datum", "A2", "--J", "a1,a2"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["fan"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    let (code, out) = run(&["special", "--datum", "A1", "--point", "x/y"]);
    assert_eq!(code, 2);
    let err: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(err["code"], "ParseError");
    assert!(err["message"].is_string());
}

#[test]
fn malformed_json_is_a_parse_error() {
    let bad = temp("bad.json", "{\"monomials\": [");
    let (code, out) = run(&["seminorm", "--datum", "A2", "--T", "a1", "--point", "0,0", "--poly", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["code"], "ParseError");
    let wrong = temp("wrong.json", "{\"monomials\": [{\"exp\": {\"(a9,1)\": 1}, \"logc\": \"0\"}]}");
    let (code, out) = run(&["seminorm", "--datum", "A2", "--T", "a1", "--point", "0,0", "--poly", wrong.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["code"], "ParseError");
}

#[test]
fn datum_round_trips_through_a_file() {
    let out = run_json(&["rootsys", "--datum", "G2"]);
    let path = temp("g2.json", &out.to_string());
    let again = run_json(&["rootsys", "--datum", path.to_str().unwrap()]);
    assert_eq!(again, out);
    let d = datum_from_json(&out).unwrap();
    assert_eq!(datum_json(&d), datum_json(&RootDatum::catalogue("G2").unwrap()));
}

#[test]
fn limit_output_re_parses() {
    let v = run_json(&["limit", "--datum", "A2", "--base", "2,5", "--dir", "0,1"]);
    assert_eq!(v["facade_coords"]["a1"], "2");
    let p = point_from_json(&v).unwrap();
    assert_eq!(p.cone, v["cone"].as_u64().unwrap() as usize);
    let profile = temp("profile.json", r#"{"a1": "5", "a2": "inf", "a1+a2": "inf"}"#);
    let v = run_json(&["limit", "--datum", "A2", "--J", "a1", "--profile", profile.to_str().unwrap()]);
    assert_eq!(v["core_type"], serde_json::json!(["a1"]));
    let none = temp("none.json", r#"{"a1": "inf", "a2": "inf", "a1+a2": "1"}"#);
    assert_eq!(run(&["limit", "--datum", "A2", "--profile", none.to_str().unwrap()]).0, 2);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("btcompact-cli-{}-out.json", std::process::id()));
    let (code, out) = run(&["fan", "--datum", "B2", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["cone_count"], 17);
}

#[test]
fn other_subcommands() {
    let t = run_json(&["transitivity", "--datum", "A2", "--x", "0,0", "--y", "1/3,1/2"]);
    assert_eq!((t["n_denominator"].as_str(), t["cartan_det"].as_i64()), (Some("6"), Some(3)));
    let e = run_json(&["embed", "--datum", "A1", "--e", "2", "--point", "1/2"]);
    assert_eq!((e["special_before"].as_bool(), e["special_after"].as_bool()), (Some(false), Some(true)));
    let c = run_json(&["cone", "--datum", "A2", "--J", "a1", "--T", "a1"]);
    assert_eq!(c["dim"], 2);
    let s = run_json(&["seminorm", "--datum", "A1", "--T", "", "--point", "0", "--dir", "1"]);
    assert_eq!(s["seminorm"]["(-a1,1)"], "-inf");
    assert_eq!(run_json(&["check", "--datum", "BC2", "--samples", "100"])["passed"], true);
}
