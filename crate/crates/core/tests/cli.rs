//! Black-box tests of the `latmax` binary.

use std::process::{Command, Output};

fn latmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latmax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

#[test]
fn search_rejects_bad_diameter() {
    let out = latmax(&["search", "--ld", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--ld"), "{err}");
}

#[test]
fn search_rejects_bad_margin() {
    let out = latmax(&["search", "--margin", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify2d_rejects_zero_margin() {
    let out = latmax(&["classify2d", "--margin", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--margin"));
}

#[test]
fn classify2d_rejects_malformed_window() {
    for w in ["3", "4,1", "a,b"] {
        let out = latmax(&["classify2d", "--window", w]);
        assert_eq!(out.status.code(), Some(1), "window {w:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("--window"));
    }
}

#[test]
fn classify2d_small_window_reports_classes() {
    let out = latmax(&["classify2d", "--window", "-1,2"]);
    let v = stdout_json(&out);
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);
    assert_eq!(v["anomaly_count"], 0);
}

#[test]
fn verify_catalogs_passes() {
    let out = latmax(&["verify"]);
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    assert!(v["catalog_checks"].as_array().unwrap().len() >= 40);
    assert!(v["slice_checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_assesses_polytope_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("box.json");
    std::fs::write(
        &path,
        r#"{
  "name": "wide-box",
  "vertices": [
    ["0", "0", "0"], ["4", "0", "0"], ["0", "4", "0"], ["4", "4", "0"],
    ["0", "0", "2"], ["4", "0", "2"], ["0", "4", "2"], ["4", "4", "2"]
  ]
}"#,
    )
    .unwrap();
    let out = latmax(&["verify", "--input", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    let input = &v["input"];
    assert_eq!(input["name"], "wide-box");
    assert_eq!(input["lattice_free"], false);
}

#[test]
fn verify_reports_parse_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"name": "bad", "vertices": [["0", "x/2", "0"], ["1","0","0"], ["0","1","0"], ["0","0","1"]]}"#,
    )
    .unwrap();
    let out = latmax(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("vertex 0") && err.contains("coordinate 1"), "{err}");
}

#[test]
fn verify_assesses_maximal_body() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m44.json");
    // conv(o, 4e1, 4e2, 2e3) is lattice-free and R-maximal
    std::fs::write(
        &path,
        r#"{"name": "m44", "vertices": [["0","0","0"], ["4","0","0"], ["0","4","0"], ["0","0","2"]]}"#,
    )
    .unwrap();
    let out = latmax(&["verify", "--input", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    let input = &v["input"];
    assert_eq!(input["lattice_free"], true);
    assert_eq!(input["verdict"]["r_maximal"], true);
    assert_eq!(input["verdict"]["z_certificate"], serde_json::Value::Null);
    assert_eq!(input["size_bounds_ok"], true);
}

fn strip_timings(mut v: serde_json::Value) -> serde_json::Value {
    v.as_object_mut().unwrap().remove("timings");
    v["report"]["config"].as_object_mut().unwrap().remove("jobs");
    v
}

#[test]
fn search_output_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "2"] {
        let path = dir.path().join(format!("out{jobs}.json"));
        let out = latmax(&["search", "--ld", "1", "--jobs", jobs, "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
        let v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        outputs.push(serde_json::to_string(&strip_timings(v)).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn search_respects_jobs_env_fallback() {
    let out = Command::new(env!("CARGO_BIN_EXE_latmax"))
        .args(["search", "--ld", "1"])
        .env("LATMAX_JOBS", "2")
        .output()
        .expect("binary runs");
    let v = stdout_json(&out);
    assert_eq!(v["report"]["config"]["jobs"], 2);
    assert_eq!(v["report"]["apex_total"], 2);
}

#[test]
fn search_ld1_report_shape() {
    let out = latmax(&["search", "--ld", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["artifact_version"], 1);
    assert_eq!(v["report"]["apex_counts"][0]["ld"], 1);
    assert_eq!(v["report"]["apex_counts"][0]["apex_count"], 2);
    // output ends with exactly one newline
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n') && !text.ends_with("\n\n"));
}
