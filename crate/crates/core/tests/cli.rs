use std::process::{Command, Output};

use lorentz_zeta::experiment::{parse_data_csv, write_data_csv, Budget, OutputRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lorentz-zeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> OutputRecord {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    OutputRecord::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["field", "--alpha", "0.25"]).status.code(), Some(0));
    assert_eq!(run(&["field"]).status.code(), Some(2));
    assert_eq!(run(&["field", "--alpha", "0.25", "--rho", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--rho", "2", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["figure", "--id", "4"]).status.code(), Some(2));
    assert_eq!(run(&["phi1", "--alpha", "0.5"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--rho", "1"]).status.code(), Some(1));
    assert_eq!(run(&["potential", "--rho", "0.8", "--zeros", "/nonexistent/zeros.txt"]).status.code(), Some(1));
}

#[test]
fn scalar_commands_match_reference_values() {
    let solve = json(&["solve", "--alpha", "0.31606"]);
    assert!((solve.results["alpha_prime"] - 0.73723).abs() < 1e-5);
    let field = json(&["field", "--alpha", "0.25", "--variant", "d_alpha"]);
    assert_eq!(field.results["field"], 4.0);
    let phi1 = json(&["phi1", "--alpha", "0.25"]);
    assert_eq!(phi1.results["closed"], 0.0);
    let Budget::Bound(budget) = phi1.error_budget["numeric"] else {
        panic!("numeric side needs a numeric budget");
    };
    assert!(phi1.results["numeric"].abs() <= budget);
    for rec in [&solve, &field, &phi1] {
        assert!(rec.is_schema_complete());
        assert_eq!(rec.schema_version, "1.0");
    }
}

#[test]
fn figure_csv_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let out = run(&["figure", "--id", "1", "--resolution", "64", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,series,y\n"));
    let rows = parse_data_csv(&text).unwrap();
    assert_eq!(rows.len(), 128);
    assert_eq!(write_data_csv(&rows).unwrap(), text);
}

#[test]
fn custom_zero_table_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    std::fs::write(&path, "# first three\n14.134725142\n21.022039639\n25.010857580\n").unwrap();
    let rec = json(&["potential", "--rho", "1.5", "--rho0", "1.5", "--t-max", "200", "--zeros", path.to_str().unwrap()]);
    assert!(rec.results["residual"].abs() < 1e-3);
    std::fs::write(&path, "21.0\n14.1\n").unwrap();
    let out = run(&["potential", "--rho", "1.5", "--zeros", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_configs_give_identical_records() {
    let args = ["solve", "--grid", "0.1:0.3:0.1", "--theta-max", "1.5"];
    let a = json(&args).without_timestamp();
    let b = json(&args).without_timestamp();
    assert_eq!(a, b);
    assert_eq!(a.data.len(), 15);
    let mut parallel = args.to_vec();
    parallel.push("--parallel");
    let c = json(&parallel).without_timestamp();
    assert_eq!(a.results, c.results);
    assert_eq!(a.data, c.data);
}

#[test]
fn validate_reports_every_check() {
    let out = run(&["validate", "--suite", "zeta", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check,observed,allowed,pass\n"));
    assert_eq!(text.lines().count(), 1 + 25);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}
