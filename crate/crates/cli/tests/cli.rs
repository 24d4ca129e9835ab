use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn dbessel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dbessel")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn eval_json(args: &[&str]) -> Value {
    let mut all = vec!["eval", "--json"];
    all.extend_from_slice(args);
    let out = dbessel(&all);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn eval_at_the_origin_matches_golden_output() {
    let out = dbessel(&["eval", "--n", "4", "--k", "1", "--x", "0,0", "--y", "1,0.3", "--method", "gegenbauer"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), golden("eval_origin.txt"));
}

#[test]
fn eval_json_report_has_the_documented_fields() {
    let v = eval_json(&["--n", "3", "--k", "0.5", "--x", "1,0.1", "--y", "1,0.4", "--method", "horn"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "eval");
    assert_eq!(v["method"], "horn");
    assert_eq!(v["passed"], true);
    for field in ["params", "value", "error", "wall_time_s"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn horn_and_gegenbauer_agree() {
    let args = ["--n", "3", "--k", "0.5", "--x", "1,0.1", "--y", "1,0.4"];
    let h = eval_json(&[&args[..], &["--method", "horn"]].concat())["value"].as_f64().unwrap();
    let g = eval_json(&[&args[..], &["--method", "gegenbauer"]].concat())["value"].as_f64().unwrap();
    assert!((h - g).abs() < 1e-9 * g);
}

#[test]
fn laplace_matches_boundary() {
    let args = ["--p", "2", "--k", "1.5", "--x", "1,0", "--y", "2,0.3"];
    let l = eval_json(&[&args[..], &["--method", "laplace"]].concat())["value"].as_f64().unwrap();
    let b = eval_json(&[&args[..], &["--method", "boundary"]].concat())["value"].as_f64().unwrap();
    assert!((l - b).abs() < 1e-4 * b, "{l} {b}");
}

#[test]
fn cartesian_points_are_converted() {
    let polar = eval_json(&["--n", "5", "--k", "1", "--x", "2,0", "--y", "1,1.5707963267948966"]);
    let cart = eval_json(&["--n", "5", "--k", "1", "--x", "2,0", "--y", "0,1", "--cartesian"]);
    let (a, b) = (polar["value"].as_f64().unwrap(), cart["value"].as_f64().unwrap());
    assert!((a - b).abs() < 1e-14 * a);
}

#[test]
fn laplace_off_the_boundary_is_a_usage_error() {
    let out = dbessel(&["eval", "--p", "2", "--k", "1.5", "--x", "1,0.2", "--y", "2,0.3", "--method", "laplace"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("method=laplace requires phi=0"), "{}", stderr(&out));
}

#[test]
fn horn_rejects_the_two_element_group() {
    let out = dbessel(&["eval", "--n", "2", "--k", "1", "--x", "1,0", "--y", "1,0", "--method", "horn"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_group_is_a_usage_error() {
    let out = dbessel(&["eval", "--k", "1", "--x", "1,0", "--y", "1,0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn density_grid_zero_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.csv");
    let out = dbessel(&["density", "--p", "2", "--k", "1", "--rho", "1", "--grid", "0", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(!path.exists());
}

#[test]
fn density_table_is_supported_in_the_disk_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = dbessel(&["density", "--p", "2", "--k", "1", "--rho", "1", "--grid", "41", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        assert!(stdout(&out).contains("within disk              true"));
        fs::read_to_string(path).unwrap()
    };
    let first = run("a.csv");
    assert_eq!(first, run("b.csv"));
    let mut lines = first.lines();
    assert_eq!(lines.next(), Some("z1,z2,H,in_hull_flag"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|f| f.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 41 * 41);
    for r in &rows {
        if r[0].hypot(r[1]) > 1.0 {
            assert_eq!(r[2], 0.0, "{r:?}");
        }
    }
}

#[test]
fn density_small_grid_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.csv");
    let out = dbessel(&["density", "--p", "2", "--k", "1", "--grid", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(path).unwrap(), golden("density_p2_k1_grid5.csv"));
}

#[test]
fn density_json_output_is_versioned() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let out = dbessel(&["density", "--p", "3", "--k", "1", "--grid", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["values"].as_array().unwrap().len(), 49);
    assert_eq!(v["report"]["within_disk"], true);
}

#[test]
fn density_io_failure_exits_with_one() {
    let out = dbessel(&["density", "--p", "2", "--k", "1", "--grid", "3", "--out", "/nonexistent-dir/h.csv"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn crosscheck_needs_two_methods() {
    let out = dbessel(&["crosscheck", "--methods", "horn"]);
    assert_eq!(code(&out), 2);
    let out = dbessel(&["crosscheck", "--methods", "horn,horn"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn crosscheck_with_a_pinned_seed_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = dbessel(&[
            "crosscheck", "--n", "3,4", "--k", "1", "--points", "2", "--samples", "20000", "--seed", "11", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        fs::read(path).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    let header = text.lines().next().unwrap();
    assert!(header.starts_with("n,k,point,") && header.contains("method_a,method_b") && header.contains("tolerance"));
    // 2 orders x 1 multiplicity x 2 points x 3 method pairs
    assert_eq!(text.lines().count(), 1 + 12);
}

#[test]
fn crosscheck_ordering_is_canonical() {
    let run = |n: &str| {
        let out = dbessel(&["crosscheck", "--n", n, "--k", "2,0.5", "--points", "1", "--methods", "horn,gegenbauer"]);
        assert_eq!(code(&out), 0);
        stdout(&out)
    };
    assert_eq!(run("4,3"), run("3,4"));
}

#[test]
fn crosscheck_tolerance_failure_exits_with_three() {
    let out = dbessel(&[
        "crosscheck", "--n", "3,4,5", "--k", "0.7", "--points", "3", "--methods", "gegenbauer,horn", "--tol", "1e-300",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("FAIL"));
}

#[test]
fn identity_suites_report_and_gate() {
    let out = dbessel(&["identity", "--which", "sN"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS") && !stdout(&out).contains("FAIL"));
    let out = dbessel(&["identity", "--which", "diskbessel", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["value"].as_f64().unwrap() <= 1e-6);
    let out = dbessel(&["identity", "--which", "nosuch"]);
    assert_eq!(code(&out), 2);
}
