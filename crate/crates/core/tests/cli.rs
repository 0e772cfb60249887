//! End-to-end tests of the `tri` binary: report shape, values, and exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
}

fn workdir(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn rational(dir: &Path, name: &str, rows: &[&[i64]]) -> String {
    let entries: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let json = serde_json::json!({
        "field": {"kind": "rational"},
        "rows": rows.len(),
        "cols": rows[0].len(),
        "entries": entries,
    });
    let path = dir.join(name);
    std::fs::write(&path, json.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

fn tri(args: &[&str]) -> Run {
    tri_env(args, None)
}

fn tri_env(args: &[&str], seed_env: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tri"));
    cmd.args(args).env_remove("TRI_SEED");
    if let Some(s) = seed_env {
        cmd.env("TRI_SEED", s);
    }
    let out = cmd.output().expect("tri runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {stdout}"));
    Run { code: out.status.code().unwrap(), report }
}

fn status(r: &Run) -> &str {
    r.report["status"].as_str().unwrap()
}

#[test]
fn compute_first_triangulant() {
    let d = workdir("compute");
    let a = rational(&d, "a.json", &[&[1, 1], &[0, 1]]);
    let b = rational(&d, "b.json", &[&[1, 0], &[1, 1]]);
    let r = tri(&["compute", "-A", &a, "-B", &b]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["command"], "compute");
    assert_eq!(r.report["result"]["value"], "-1");
    assert_eq!(r.report["result"]["method"], "direct_determinant");
    assert_eq!(r.report["inputs_digest"].as_str().unwrap().len(), 64);
    assert!(r.report["timestamp"].as_u64().is_some());

    let r = tri(&["compute", "-A", &a, "-B", &b, "--k", "0"]);
    assert_eq!(r.report["result"]["value"], "1");
    assert_eq!(r.report["result"]["method"], "trivial_boundary");

    let r = tri(&["compute", "-A", &a, "-B", &b, "--diagnostics"]);
    assert_eq!(r.report["result"]["kernel_dim"], 0);
    assert_eq!(r.report["result"]["spectrum_a"]["eigenvalues"][0]["algebraic_mult"], 2);
}

#[test]
fn compute_geometric_multiplicity_shortcut() {
    let d = workdir("shortcut");
    let a = rational(&d, "a.json", &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
    let b = rational(&d, "b.json", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
    let r = tri(&["compute", "-A", &a, "-B", &b, "--k", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["value"], "0");
    assert_eq!(r.report["result"]["method"], "geometric_multiplicity_zero");
}

#[test]
fn compute_one_by_one_is_flagged() {
    let d = workdir("n1");
    let a = rational(&d, "a.json", &[&[5]]);
    let r = tri(&["compute", "-A", &a, "-B", &a]);
    assert_eq!(r.report["result"]["value"], "1");
    assert_eq!(r.report["result"]["degenerate_by_convention"], true);
}

#[test]
fn check_verdicts_and_exit_codes() {
    let d = workdir("check");
    let x = rational(&d, "x.json", &[&[0, 1], &[1, 0]]);
    let z = rational(&d, "z.json", &[&[1, 0], &[0, -1]]);
    let b = rational(&d, "b.json", &[&[1, 0], &[-1, 2]]);

    let r = tri(&["check", "-A", &x, "-B", &b, "--k", "1", "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["verdict"], true);
    assert_eq!(r.report["result"]["triangulant_k"]["value"], "0");
    assert!(r.report["result"]["oracle"]["witness"].is_object());

    let r = tri(&["check", "-A", &x, "-B", &z, "--k", "1", "--oracle"]);
    assert_eq!(r.code, 1);
    assert_eq!(status(&r), "predicate_false");
    assert_eq!(r.report["result"]["verdict"], false);
    assert_eq!(r.report["result"]["triangulant_k"]["value"], "4");

    let da = rational(&d, "da.json", &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let db = rational(&d, "db.json", &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 6]]);
    let r = tri(&["check", "-A", &da, "-B", &db, "--k", "2", "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["triangulant_k"]["value"], "0");
}

#[test]
fn check_with_krylov_vector() {
    let d = workdir("krylov");
    let a = rational(&d, "a.json", &[&[0, 1], &[0, 0]]);
    let b = rational(&d, "b.json", &[&[1, 0], &[0, 2]]);
    let v = d.join("v.json");
    std::fs::write(&v, r#"{"field": {"kind": "rational"}, "entries": ["1", "0"]}"#).unwrap();
    let r = tri(&["check", "-A", &a, "-B", &b, "--k", "1", "--vector", v.to_str().unwrap()]);
    let krylov = &r.report["result"]["krylov"];
    assert_eq!(krylov["dim_a"], 1);
    assert_eq!(krylov["dim_b"], 1);
    assert_eq!(krylov["holds"], true);
}

#[test]
fn oracle_needs_simple_spectrum() {
    let d = workdir("unsupported");
    let a = rational(&d, "a.json", &[&[1, 1], &[0, 1]]);
    let b = rational(&d, "b.json", &[&[1, 0], &[0, 2]]);
    let r = tri(&["check", "-A", &a, "-B", &b, "--k", "1", "--oracle"]);
    assert_eq!(r.code, 3);
    assert_eq!(status(&r), "unsupported");
}

#[test]
fn spectrum_reports() {
    let d = workdir("spectrum");
    let x = rational(&d, "x.json", &[&[0, 1], &[1, 0]]);
    let r = tri(&["spectrum", "-A", &x]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["charpoly"], "x^2-1");
    assert_eq!(r.report["result"]["D"], "4");

    let diag = rational(&d, "diag.json", &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 4]]);
    let r = tri(&["spectrum", "-A", &diag, "--k", "2"]);
    assert_eq!(r.report["result"]["D_r"]["2"], "-15");
    assert_eq!(r.report["result"]["G_k"], "11390625");

    let rot = rational(&d, "rot.json", &[&[0, 1], &[-1, 0]]);
    let r = tri(&["spectrum", "-A", &rot]);
    assert_eq!(r.code, 3);
    assert_eq!(r.report["result"]["charpoly"], "x^2+1");
    assert_eq!(r.report["result"]["split"], false);
}

#[test]
fn input_errors() {
    let d = workdir("errors");
    let bad = d.join("bad.json");
    std::fs::write(&bad, r#"{"field": {"kind": "rational"}, "rows": 2, "cols": 2, "entries": [["1"]]}"#).unwrap();
    let good = rational(&d, "good.json", &[&[1, 0], &[0, 1]]);
    let r = tri(&["compute", "-A", bad.to_str().unwrap(), "-B", &good]);
    assert_eq!(r.code, 2);
    assert_eq!(status(&r), "input_error");

    let r = tri(&["compute", "-A", "/nonexistent/a.json", "-B", &good]);
    assert_eq!(r.code, 2);

    let big = rational(&d, "big.json", &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let r = tri(&["compute", "-A", &big, "-B", &good]);
    assert_eq!(r.code, 2);

    // clap usage errors still produce a JSON report
    let r = tri(&["compute", "-A", &good]);
    assert_eq!(r.code, 2);
    assert_eq!(status(&r), "input_error");
}

#[test]
fn mub_construct_and_certify() {
    let d = workdir("mub");
    let out = d.join("wh3.json");
    let r = tri(&["mub", "construct", "--p", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["count"], 4);
    let r = tri(&["mub", "certify", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["result"]["pairs"].as_array().unwrap().len(), 6);
    assert_eq!(r.report["result"]["all_unbiased"], true);
    assert_eq!(r.report["result"]["all_saturated"], true);

    let r = tri(&["mub", "construct", "--p", "4"]);
    assert_eq!(r.code, 2);

    let std2 = r#"[["1,0","0,0"],["0,0","1,0"]]"#;
    let h = format!(r#"[["{s},0","{s},0"],["{s},0","-{s},0"]]"#, s = std::f64::consts::FRAC_1_SQRT_2);
    let same = d.join("same.json");
    std::fs::write(&same, format!(r#"{{"n": 2, "bases": [{std2}, {std2}]}}"#)).unwrap();
    let r = tri(&["mub", "certify", same.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["result"]["all_unbiased"], false);

    let hadamard = d.join("hadamard.json");
    std::fs::write(&hadamard, format!(r#"{{"n": 2, "bases": [{std2}, {h}]}}"#)).unwrap();
    let r = tri(&["mub", "certify", hadamard.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let pair = &r.report["result"]["pairs"][0];
    assert_eq!(pair["saturated"], true);
    assert!((pair["triangulant_magnitude"].as_f64().unwrap() - 4.0).abs() < 1e-9);
}

#[test]
fn selftest_is_deterministic() {
    let a = tri(&["selftest", "--seed", "5"]);
    let b = tri(&["selftest", "--seed", "5"]);
    assert_eq!(a.code, 0, "{}", a.report);
    assert_eq!(a.report["result"], b.report["result"]);
    assert_eq!(a.report["inputs_digest"], b.report["inputs_digest"]);
    assert_eq!(a.report["result"]["failed"], 0);
}

#[test]
fn seed_precedence() {
    let from_env = tri_env(&["selftest"], Some("5"));
    let from_flag = tri_env(&["selftest", "--seed", "5"], Some("9"));
    assert_eq!(from_env.report["result"]["seed"], 5);
    assert_eq!(from_flag.report["result"]["seed"], 5);
    assert_eq!(from_env.report["inputs_digest"], from_flag.report["inputs_digest"]);
}
