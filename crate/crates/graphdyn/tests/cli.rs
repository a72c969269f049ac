use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn graphdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphdyn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = graphdyn(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn poly_renders_closed_forms() {
    assert_eq!(stdout(&["poly", "K3"]), "1 + 3x^2y + 3xy^2 + y^3");
    assert_eq!(stdout(&["poly", "E2"]), "1 + 2y + y^2");
}

#[test]
fn weighted_diagonal_odd_sums() {
    let v = json(&["poly", "edges:5:0-4", "--weighted", "--k=-211/80", "--u=299/120", "--diag"]);
    let c = &v["diagonal"]["coeffs"];
    assert_eq!((c[1].as_str(), c[3].as_str(), c[5].as_str()), (Some("3"), Some("-28/3"), Some("16/5")));
    assert_eq!(v["table"]["order"], 5);
    assert_eq!(v["params"]["k"], "-211/80");
    assert!(v["generator"].as_str().unwrap().starts_with("graphdyn "));
}

#[test]
fn coefficients() {
    assert_eq!(stdout(&["coeff", "C5", "2", "1"]), "5");
    assert_eq!(stdout(&["coeff", "S5", "1", "2"]), "6");
    assert_eq!(stdout(&["coeff", "S4+P2", "1", "1"]), "5");
    assert_eq!(graphdyn(&["coeff", "K3", "3", "3"]).status.code(), Some(1));
}

#[test]
fn lyapunov_lines() {
    assert_eq!(stdout(&["lyapunov", "C5", "C5"]), "15/2 · π, subcritical");
    assert_eq!(stdout(&["lyapunov", "K4", "S2+2*P2"]), "-27 · π, supercritical");
    assert_eq!(stdout(&["lyapunov", "K4", "K4"]), "0, inconclusive");
    let v = json(&["lyapunov", "C5", "C5"]);
    assert_eq!(v["lyapunov"]["pi_coefficient"], "15/2");
    assert_eq!(v["lyapunov"]["sign"], "positive");
    let v = json(&["lyapunov", "C5", "C5", "--general", "0,-1,1,0"]);
    assert_eq!(v["general"]["pi_coefficient"], "15/2");
}

#[test]
fn isolated_vertices_need_the_override() {
    let out = graphdyn(&["lyapunov", "K4", "E2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("isolated"));
    assert!(graphdyn(&["lyapunov", "K4", "E2", "--allow-isolated"]).status.success());
}

#[test]
fn radii_forward_and_inverse() {
    let v = json(&["radii", "edges:5:0-4", "--k=-211/80", "--u=299/120"]);
    let exact: Vec<&str> = v["roots"].as_array().unwrap().iter().map(|r| r["exact"].as_str().unwrap()).collect();
    assert_eq!(exact, ["1/2", "3"]);
    assert!(stdout(&["radii", "K5", "--fit", "1,2"]).starts_with("INFEASIBLE: "));
    assert!(stdout(&["radii", "E5", "--fit", "1,2"]).contains("positive = negative"));
    let v = json(&["radii", "edges:5:0-4", "--fit-squared", "1/2,3"]);
    assert_eq!(v["params"]["u"], "299/120");
    assert_eq!(v["feasible"], true);
    assert_eq!(graphdyn(&["radii", "K4", "--k", "1", "--u", "0"]).status.code(), Some(1));
}

#[test]
fn classify_default_points() {
    assert!(stdout(&["classify", "example1", "--g1", "K2", "--g2", "E3"]).starts_with("saddle"));
    assert!(stdout(&["classify", "example1", "--g1", "K1", "--g2", "E1"]).starts_with("unstable_node"));
    let out = graphdyn(&["classify", "example1", "--g1", "K2", "--g2", "E3", "--at", "0,0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn simulate_writes_csv_and_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let text = stdout(&["simulate", "circle2", "--g", "K3", "--seeds", "0.5,2", "--method", "rkf45", "--duration", "2", "--out", out.to_str().unwrap()]);
    assert!(text.contains("stable cycle: mean radius 1.000000"), "{text}");
    let csv = fs::read_to_string(out.join("trajectory_0.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,x,y"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[1], "5.0000000000000000e-1");
    let cycles: Value = serde_json::from_str(&fs::read_to_string(out.join("cycles.json")).unwrap()).unwrap();
    assert_eq!(cycles["report"]["cycles"][0]["stability"], "stable");
    assert_eq!(cycles["report"]["config"]["method"], "rkf45_adaptive");
}

#[test]
fn simulate_hopf_and_eps_examples() {
    let t = stdout(&["simulate", "hopf", "--g1", "K4", "--g2", "S2+2*P2", "--alpha", "0.001", "--seeds", "0.05,0.2"]);
    assert!(t.contains("stable cycle"), "{t}");
    let v = json(&["simulate", "eps-lienard", "--g1", "edges:5:0-4", "--k=-211/80", "--u=299/120", "--eps", "0.01", "--seeds", "0.3,1.2,2.2"]);
    let radii: Vec<f64> = v["report"]["cycles"].as_array().unwrap().iter().map(|c| c["mean_radius"].as_f64().unwrap()).collect();
    assert_eq!(radii.len(), 2);
    assert!((radii[0] - 0.5f64.sqrt()).abs() < 0.05 && (radii[1] - 3f64.sqrt()).abs() < 0.1);
}

#[test]
fn seed_cap_and_bad_input_are_user_errors() {
    assert_eq!(graphdyn(&["simulate", "circle2", "--g", "K3", "--seeds", "1,2,3", "--seed-cap", "2"]).status.code(), Some(1));
    assert_eq!(graphdyn(&["simulate", "circle2", "--g", "K3", "--seeds", "-1"]).status.code(), Some(1));
    assert_eq!(graphdyn(&["simulate", "hopf", "--g1", "K4", "--seeds", "1"]).status.code(), Some(1));
    assert_eq!(graphdyn(&["poly", "X3"]).status.code(), Some(1));
    assert_eq!(graphdyn(&["nonsense"]).status.code(), Some(1));
    assert_eq!(graphdyn(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["radii", "E7", "--fit", "1,2,3", "--json"];
    assert_eq!(graphdyn(&args).stdout, graphdyn(&args).stdout);
    let args = ["simulate", "circle2", "--g", "K3", "--seeds", "0.5", "--json"];
    assert_eq!(graphdyn(&args).stdout, graphdyn(&args).stdout);
}

#[test]
fn out_file_receives_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.json");
    stdout(&["poly", "K3", "--out", path.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["polynomial"]["maxdeg"], 3);
    assert_eq!(v["rendered"], "1 + 3x^2y + 3xy^2 + y^3");
}

#[test]
fn edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p2.txt");
    fs::write(&path, "2\n0 1\n").unwrap();
    assert_eq!(stdout(&["poly", &format!("@{}", path.display())]), "1 + 2xy + y^2");
}

#[test]
fn repro_subset_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = graphdyn(&["repro", "--only", "lyapunov", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["name"].as_str().unwrap().contains("lyapunov")));
    assert!(entries.iter().all(|e| e["status"] == "pass" && !e["paper_anchor"].as_str().unwrap().is_empty()));
    let names: Vec<&str> = entries.iter().map(|e| e["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let saved: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(saved, v);
}

#[test]
fn full_repro_passes() {
    let out = graphdyn(&["repro"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.trim_end().ends_with("0 fail, 0 inconclusive"), "{text}");
}
