use std::process::Command;

use dynzsig_cli::{run_from, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_from(std::iter::once("dynzsig").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

const COMMANDS: &[&[&str]] = &[
    &["zsig", "--map", "(z^2+z)", "--alpha", "1", "--gamma", "0", "-N", "8", "--full-integers"],
    &["zsig", "--map", "z^2/(1+z)", "--alpha", "2/3", "--relaxed", "-N", "4"],
    &["rank", "--map", "(z^2+z)", "--alpha", "1", "--prime", "43", "-N", "6"],
    &["height", "--map", "(z^2+z)", "--point", "1", "--tol", "1e-6"],
    &["height", "--map", "z^2-1", "--point", "0"],
    &["growth", "--map", "(z^2+z)", "--alpha", "1/2", "-N", "10"],
    &["modp", "--map", "z^2+1", "--alpha", "0", "--prime", "5"],
    &["conj", "weak", "--map", "z^2+1", "--alpha", "0", "-N", "6"],
    &["conj", "strong", "--map", "(z^2+1)", "--alpha", "0", "-M", "4", "-N", "4"],
    &["density", "--map", "z^2+1", "--alpha", "0", "--gamma", "alpha", "--pmax", "500"],
    &["verify", "growth", "--map", "(z^2+z)", "--alpha", "1", "--gamma", "0", "-N", "8", "--pmax", "10000"],
    &["verify", "disjoint", "--map", "z^2-1", "--alpha", "1/3", "-N", "8"],
    &["verify", "tailcycle", "--map", "z^2+1", "--alpha", "0"],
];

#[test]
fn every_report_matches_schema() {
    let validator = schema();
    for args in COMMANDS {
        let report = json(args);
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| format!("{e} at {}", e.instance_path)).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(report["tool"], "dynzsig");
        assert_eq!(report["seed"], 0);
    }
}

#[test]
fn output_is_byte_identical() {
    for args in COMMANDS {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn example_zsigmondy_set_is_empty() {
    let report = json(&["zsig", "--map", "(z^2+z)", "--alpha", "1", "--gamma", "0", "-N", "10"]);
    assert_eq!(report["report"]["zsigmondy"]["zsigmondy_set"], serde_json::json!([]));
    assert_eq!(report["config"]["horizon"], 10);
    assert!(report["report"]["zsigmondy"]["records"][3].get("a").is_none());
}

#[test]
fn verification_passes() {
    let out = run(&["verify", "growth", "--map", "(z^2+z)", "--alpha", "1", "--gamma", "0", "-N", "8", "--pmax", "10000"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["zsig", "--map", "(z^2+z)/(0)", "--alpha", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--map") && out.stderr.contains("zero polynomial"), "{}", out.stderr);

    let out = run(&["zsig", "--map", "z^2/(1+z)", "--alpha", "2/3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("polynomial type"));

    let out = run(&["rank", "--map", "z^2+z", "--alpha", "1", "--prime", "6"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--prime"));

    let out = run(&["height", "--map", "z^2", "--point", "1", "--tol", "-1"]);
    assert_eq!(out.code, 2);

    let out = run(&["verify", "disjoint", "--map", "z^2+z", "--alpha", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("period one"));

    let out = run(&["modp", "--map", "z^2+z", "--alpha", "1", "--prime", "5", "--format", "csv"]);
    assert_eq!(out.code, 2);
}

#[test]
fn csv_tables() {
    let out = run(&["growth", "--map", "z^2+z", "--alpha", "1", "-N", "4", "--format", "csv"]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("n,digits_A,log_A_over_dn,hhat,err"));
    assert_eq!(lines.count(), 5);

    let out = run(&["density", "--map", "z^2+1", "--alpha", "0", "--pmax", "30", "--format", "csv"]);
    assert!(out.stdout.starts_with("p,rho,sigma,divides_some_term\n2,0,2,true\n"), "{}", out.stdout);

    let out = run(&["zsig", "--map", "z^2+z", "--alpha", "1", "-N", "4", "--format", "csv"]);
    assert_eq!(out.stdout.lines().nth(4), Some("3,2,true,7,"));
}

#[test]
fn seed_and_budget_are_echoed() {
    let v = json(&["zsig", "--map", "z^2+z", "--alpha", "1", "-N", "3", "--seed", "7", "--trial-bound", "1000"]);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["config"]["factor_budget"]["seed"], 7);
    assert_eq!(v["config"]["factor_budget"]["trial_bound"], 1000);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dynzsig");
    let ok = Command::new(bin).args(["modp", "--map", "z^2+1", "--alpha", "0", "--prime", "5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!((v["report"]["tail"].as_u64(), v["report"]["cycle"].as_u64()), (Some(0), Some(3)));

    let bad = Command::new(bin).args(["zsig", "--map", "(z^2+z)/(0)"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));

    let env_bad = Command::new(bin)
        .args(["zsig", "--map", "z^2+z", "--alpha", "1"])
        .env(dynzsig_cli::BUDGET_ENV, "rho=lots")
        .output()
        .unwrap();
    assert_eq!(env_bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&env_bad.stderr).contains(dynzsig_cli::BUDGET_ENV));

    let env_ok = Command::new(bin)
        .args(["zsig", "--map", "z^2+z", "--alpha", "1", "-N", "2"])
        .env(dynzsig_cli::BUDGET_ENV, "trial_bound=500,rho=10")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&env_ok.stdout).unwrap();
    assert_eq!(v["config"]["factor_budget"]["trial_bound"], 500);
    assert_eq!(v["config"]["factor_budget"]["rho_iterations"], 10);
}
