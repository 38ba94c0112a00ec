//! End-to-end checks of the `arithdyn` binary: JSON round-trips, exit
//! codes, and bit-identical output across identical invocations.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arithdyn"))
        .args(args)
        .output()
        .expect("spawn arithdyn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json_roundtrips() {
    let out = run(&["analyze", "x^2", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "arithdyn/1");
    assert_eq!(doc["degree"], 2);
    let report: arithdyn::cli::AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    let reemitted = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(reemitted.trim(), stdout(&out).trim());
    let pts: Vec<&str> = report.periodic_points.iter().map(|p| p.point.as_str()).collect();
    assert_eq!(pts, ["0", "1", "inf"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "x^2"]).status.code(), Some(0));
    // parse error
    assert_eq!(run(&["analyze", "x^2/0"]).status.code(), Some(2));
    // usage error
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    // FAIL verdict: periodic points collide mod the good prime 2
    assert_eq!(
        run(&[
            "verify", "x^3-6x^2+12x-6", "--lemma", "injectivity", "--prime", "2"
        ])
        .status
        .code(),
        Some(1)
    );
    // budget: the resultant is a semiprime of two 16-digit primes, beyond
    // the factorization effort budget
    assert_eq!(
        run(&["analyze", "F=X^2;G=1000000000000128000000000003367Y^2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["analyze", "(x^2-1)*(x^2-4)-x", "--json", "--period-cap", "2"],
        vec!["bounds", "--d", "3", "--s", "2"],
        vec!["census", "x^2", "--p", "13", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "output differs for {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn generate_feeds_analyze() {
    let gen = run(&["generate", "dfixed", "--d", "3"]);
    assert_eq!(stdout(&gen).trim(), "x^3-6x^2+12x-6");
    let gen = run(&["generate", "period2", "--ns", "1,2"]);
    assert_eq!(stdout(&gen).trim(), "x^4-5x^2-x+4");
    let gen = run(&["generate", "baron-cycle"]);
    assert_eq!(stdout(&gen).trim(), "x^3-3x^2+x+2");
    let analyzed = run(&["analyze", stdout(&gen).trim(), "--period-cap", "2"]);
    assert_eq!(analyzed.status.code(), Some(0));
    // repeated n values are rejected
    assert_eq!(run(&["generate", "period2", "--ns", "2,2"]).status.code(), Some(2));
}

#[test]
fn bounds_table_rows() {
    let out = run(&["bounds", "--d", "2", "--s", "1", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["bounds"].as_array().unwrap();
    let get = |name: &str| -> &serde_json::Value {
        rows.iter().find(|r| r["name"] == name).unwrap()
    };
    assert_eq!(get("B")["value"], "7203");
    assert_eq!(get("kappa")["value"], "21622");
    assert_eq!(get("three-point")["value"], "7206");
    assert_eq!(get("d+5")["value"], "7");
    assert_eq!(get("d+1")["value"], "3");

    let out = run(&["bounds", "--d", "3", "--s", "1", "--family", "bs-ess", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["bounds"].as_array().unwrap();
    let kappa = rows.iter().find(|r| r["name"] == "kappa").unwrap();
    assert_eq!(kappa["value"], "196621");
    let c5 = rows.iter().find(|r| r["name"] == "C(5,s)").unwrap();
    assert_eq!(c5["kind"], "LOG10");
}

#[test]
fn verify_and_census_subcommands() {
    let out = run(&["verify", "x^3-3x^2+x+2", "--lemma", "baron", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["report"]["status"], "PASS");

    let out = run(&[
        "verify", "x^3-x^2", "--lemma", "condition-count", "--set", "0,inf",
    ]);
    assert!(stdout(&out).contains("condition count = 3"));

    let out = run(&[
        "verify", "(x^2-1)*(x^2-4)-x", "--lemma", "distance", "--P", "1", "--Q", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("Pass"));

    // x^2 mod 7: fixed residues 0, 1, inf and the 2-cycle {2, 4}
    let out = run(&["census", "x^2", "--p", "7", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["census"]["periodic_count"], 5);
    assert_eq!(doc["census"]["cycle_lengths"], serde_json::json!([1, 1, 1, 2]));
    // bad prime is refused
    let out = run(&["census", "F=X^2;G=5Y^2", "--p", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
