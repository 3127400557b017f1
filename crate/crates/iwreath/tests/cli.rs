//! End-to-end checks of the `iwreath` binary: output shapes and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwreath"))
        .args(args)
        .env_remove("IW_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--semigroup", "isn", "--n", "3", "--count-only"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "34");

    let o = run(&["enumerate", "--semigroup", "wreath", "--m", "2", "--n", "2", "--count-only"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "127");
}

#[test]
fn enumerate_streams_lines() {
    let o = run(&["enumerate", "--semigroup", "isn", "--n", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "0");

    let o = run(&["enumerate", "--semigroup", "isn", "--n", "2", "--format", "json"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 2);
    }
}

#[test]
fn build_and_validate_round_trip() {
    let o = run(&[
        "cross-section", "build", "--kind", "R", "--partition", "[1<2][3]", "--format", "json",
    ]);
    assert!(o.status.success());
    let json = stdout(&o);

    let dir = std::env::temp_dir().join("iwreath-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cs.json");
    std::fs::write(&path, &json).unwrap();
    let o = run(&["cross-section", "validate", "--in", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("VALID"));
}

#[test]
fn validate_rejects_non_section() {
    let dir = std::env::temp_dir().join("iwreath-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"kind":"R","n":2,"elements":[]}"#).unwrap();
    let o = run(&["cross-section", "validate", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn wreath_build_sizes() {
    let o = run(&[
        "cross-section", "build", "--kind", "R", "--partition", "[1<2]",
        "--components", "[1<2]", "--count-only",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "25");

    let o = run(&[
        "cross-section", "build", "--kind", "L", "--partition", "[1][2]",
        "--components", "[1<2];[1][2]", "--count-only",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "25");
}

#[test]
fn verify_theorems() {
    for args in [
        vec!["verify", "--theorem", "green-criteria", "--m", "1", "--n", "2"],
        vec!["verify", "--theorem", "isom-conjugacy-isn", "--n", "3"],
        vec!["verify", "--theorem", "counting", "--m", "2", "--n", "2"],
        vec!["verify", "--theorem", "cross-section-search", "--n", "3"],
    ] {
        let o = run(&args);
        assert!(o.status.success(), "{args:?}");
        assert!(stdout(&o).starts_with("PASS"), "{args:?}");
    }
}

#[test]
fn count_output_shape() {
    let o = run(&["count", "--noniso", "--m", "2", "--n", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);

    let o = run(&["count", "--pn", "20"]);
    assert_eq!(stdout(&o).trim(), "627");
}

#[test]
fn usage_and_bound_errors_exit_2() {
    let o = run(&["enumerate", "--semigroup", "isn", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("bound"), "{err}");

    let o = run(&["verify", "--theorem", "no-such-theorem", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["count", "--noniso", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_overrides_bounds() {
    let dir = std::env::temp_dir().join("iwreath-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bounds.conf");
    std::fs::write(&path, "max_n=2\n").unwrap();
    let o = run(&["--config", path.to_str().unwrap(), "enumerate", "--semigroup", "isn", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_iwreath"))
        .args(["enumerate", "--semigroup", "isn", "--n", "3", "--count-only"])
        .env("IW_CONFIG", path.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
