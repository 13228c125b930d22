use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a6-hurwitz"))
        .args(args)
        .env_remove("A6_HURWITZ_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn classify_five_abs_is_connected() {
    let out = bin(&["classify", "--k", "5", "--mode", "abs"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["orbit_count"], 1);
    assert_eq!(v["payload"]["group_label"], "A6");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys.len(), 3);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn report_fields_are_exactly_the_orbit_report() {
    let out = bin(&["classify", "--k", "6", "--mode", "inner", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let payload_at = text.find("\"payload\"").unwrap();
    let order = [
        "\"k\"",
        "\"mode\"",
        "\"group_label\"",
        "\"orbit_count\"",
        "\"orbits\"",
        "\"total_tuples\"",
    ];
    let positions: Vec<usize> = order
        .iter()
        .map(|k| payload_at + text[payload_at..].find(k).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["payload"].as_object().unwrap().len(), order.len());
    assert_eq!(v["payload"]["orbit_count"], 3);
}

#[test]
fn lift_of_a_repeated_pair_is_trivial() {
    let out = bin(&["lift", "--tuple", "(1,2)(3,4) (1,2)(3,4)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["payload"]["exponent"], 0);
}

#[test]
fn reproduce_all_passes() {
    let out = bin(&["reproduce", "--code", "all", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("6/6 pass"));
}

#[test]
fn shallow_reproduction_fails_with_witnesses() {
    let out = bin(&["reproduce", "--code", "b6", "--depth", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["payload"][0]["passed"], false);
    assert!(!v["payload"][0]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["classify", "--k", "7", "--mode", "inner"][..],
        &["classify", "--k", "5"],
        &["lift", "--tuple", "(1,2,3)"],
        &["orbit", "--tuple", "(1,2)(3,4) (1,3)(2,4)", "--mode", "outer"],
        &["reproduce", "--code", "b7"],
        &["frobnicate"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn worker_count_does_not_change_the_payload() {
    let run = |workers: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_a6-hurwitz"))
            .args(["classify", "--k", "6", "--mode", "abs"])
            .env("A6_HURWITZ_WORKERS", workers)
            .output()
            .unwrap();
        let v = json(&out);
        assert_eq!(v["config"]["workers"], workers.parse::<u64>().unwrap());
        serde_json::to_string(&v["payload"]).unwrap()
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn csv_columns_and_quoting() {
    let out = bin(&["classify", "--k", "6", "--mode", "abs", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        [
            "k",
            "mode",
            "orbit_index",
            "size",
            "lift_exponent",
            "lift_order",
            "monodromy_order",
            "representative"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(
        &rows[0][7],
        "(1,2)(3,4) (1,2)(3,4) (1,2)(3,5) (1,2)(3,5) (1,3)(2,6) (1,3)(2,6)"
    );
}

#[test]
fn class_list_and_orbit() {
    let out = bin(&["class-list"]);
    let v = json(&out);
    assert_eq!(v["payload"].as_array().unwrap().len(), 45);
    assert_eq!(v["payload"][0]["element"], "(1,2)(3,4)");
    let t = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)";
    let v = json(&bin(&["orbit", "--tuple", t, "--mode", "inner"]));
    assert_eq!(v["payload"]["size"], 432);
    assert_eq!(v["payload"]["monodromy_order"], 360);
}
