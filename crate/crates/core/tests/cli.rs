use hankel_laplace::cli::{load_config, run};
use serde_json::Value;
use tempfile::tempdir;

fn run_args(args: &[&str]) -> i32 {
    let mut v = vec!["hankel-laplace"];
    v.extend_from_slice(args);
    run(v)
}

fn read_json(p: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn verify_f_suite_passes() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("f.json");
    let code = run_args(&["verify", "--suite", "F", "--alpha", "2.356194", "--a", "1.0", "--json", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = read_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["result"][0]["identity_id"], "F");
    assert_eq!(v["result"][0]["verdict"], "pass");
}

#[test]
fn zeta_check_at_minus_one() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("z.json");
    assert_eq!(run_args(&["zeta-check", "--s", "-1", "--json", out.to_str().unwrap()]), 0);
    let v = read_json(&out);
    assert!(v["result"]["residual"].as_f64().unwrap() <= 1e-6);
}

#[test]
fn empty_grid_is_a_usage_error() {
    assert_eq!(run_args(&["solve", "--n-r", "0"]), 1);
    assert_eq!(run_args(&["solve", "--n-theta", "0"]), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run_args(&["nonsense"]), 1);
    assert_eq!(run_args(&["verify", "--suite", "nope"]), 1);
    assert_eq!(run_args(&["solve", "--alpha", "1.0"]), 1);
    assert_eq!(run_args(&["solve", "--config", "/nonexistent/cfg.json"]), 1);
}

#[test]
fn failed_verdict_exits_two() {
    // a tolerance below the attainable residual must fail
    assert_eq!(run_args(&["verify", "--suite", "ident1", "--tolerance", "1e-30"]), 2);
}

#[test]
fn solve_writes_csv_and_is_deterministic() {
    let dir = tempdir().unwrap();
    let csv = dir.path().join("q.csv");
    let j1 = dir.path().join("a.json");
    let j2 = dir.path().join("b.json");
    let base = ["solve", "--data", "power_im", "--k", "-1.5", "--n-r", "3", "--n-theta", "4", "--csv", csv.to_str().unwrap()];
    let mut a1 = base.to_vec();
    a1.extend(["--json", j1.to_str().unwrap()]);
    assert_eq!(run_args(&a1), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,theta,q,exact");
    assert_eq!(lines.len(), 13);

    // re-run from the emitted report: identical bytes apart from the output path
    let mut a2 = vec!["solve", "--config", j1.to_str().unwrap()];
    a2.extend(["--json", j2.to_str().unwrap()]);
    assert_eq!(run_args(&a2), 0);
    let (t1, t2) = (std::fs::read_to_string(&j1).unwrap(), std::fs::read_to_string(&j2).unwrap());
    let strip = |t: &str| t.lines().filter(|l| !l.contains("json_path")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&t1), strip(&t2));
    assert!(t1.contains("e-1") || t1.contains("e0"));
    let cfg = load_config(&j1).unwrap();
    assert_eq!(cfg.grid.n_theta, 4);
}

#[test]
fn flags_override_config_file() {
    let dir = tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"domain": {"a": 2.0, "alpha": 3.0}, "grid": {"r_min": 2.5, "r_max": 4.0, "n_r": 2, "n_theta": 2}}"#).unwrap();
    let out = dir.path().join("o.json");
    assert_eq!(run_args(&["solve", "--config", cfg.to_str().unwrap(), "--alpha", "2.5", "--json", out.to_str().unwrap()]), 0);
    let v = read_json(&out);
    assert_eq!(v["config"]["domain"]["a"].as_f64(), Some(2.0));
    assert_eq!(v["config"]["domain"]["alpha"].as_f64(), Some(2.5));
    assert_eq!(v["result"]["n_points"], 4);
}

#[test]
fn trace_and_asymptotics_and_global_relation() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = out.to_str().unwrap();
    assert_eq!(run_args(&["trace", "--trace", "plus", "--r-min", "1.5", "--n-r", "3", "--json", o]), 0);
    assert!(read_json(&out)["result"]["max_abs_error"].as_f64().unwrap() < 1e-8);
    assert_eq!(run_args(&["asymptotics", "--r-min", "10", "--r-max", "1000", "--n-r", "6", "--json", o]), 0);
    assert!(read_json(&out)["result"]["fitted_exponent"].as_f64().unwrap() < -0.9);
    let csv = dir.path().join("gr.csv");
    assert_eq!(
        run_args(&["global-relation", "--k-grid", "-0.5,-0.25", "--n-points", "2", "--json", o, "--csv", csv.to_str().unwrap()]),
        0
    );
    let v = read_json(&out);
    assert_eq!(v["result"].as_array().unwrap().len(), 2);
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("identity_id,point,re,im"));
}
