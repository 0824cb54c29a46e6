use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn gsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsg"))
        .args(args)
        .output()
        .unwrap()
}

fn gsg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gsg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_matches_golden() {
    let o = gsg(&[
        "analyze",
        &fixture("almost_symmetric_med.gsg"),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let golden = include_str!("golden/analyze_med.json");
    assert_eq!(stdout(&o), golden);
}

#[test]
fn reads_stdin() {
    let text = std::fs::read_to_string(fixture("almost_symmetric_med.gsg")).unwrap();
    let o = gsg_stdin(&["analyze", "-", "--format", "json"], &text);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/analyze_med.json"));
}

#[test]
fn failed_validation_exits_one() {
    let o = gsg_stdin(
        &["validate", "-"],
        "gsg 1\ndim 2\nlower 0 0\nconductor 2 2\n0 0\n1 0\n2 2\n",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[G2]"), "{}", stdout(&o));
}

#[test]
fn malformed_input_exits_two() {
    let o = gsg_stdin(&["validate", "-"], "gsg 1\ndim 2\nlower 0 x\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
    let o = gsg(&["verify", &fixture("almost_symmetric_med.gsg"), "THM99"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_named_identity() {
    let o = gsg(&[
        "verify",
        &fixture("almost_symmetric_non_med.gsg"),
        "thm24",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn render_is_deterministic() {
    let args = [
        "render",
        &fixture("almost_symmetric_non_med.gsg"),
        "--overlay",
        &fixture("almost_symmetric_non_med.gsg"),
        "--format",
        "svg",
    ];
    let a = gsg(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).starts_with("<svg"));
    assert_eq!(a.stdout, gsg(&args).stdout);
}

#[test]
fn canonical_round_trips_through_text() {
    let o = gsg(&["canonical", &fixture("almost_symmetric_med.gsg")]);
    assert_eq!(o.status.code(), Some(0));
    let k = good_semigroups::format::parse(&stdout(&o)).unwrap();
    assert!(k.contains(&good_semigroups::Point::from([1, 1])));
    assert!(!k.contains(&good_semigroups::Point::from([1, 2])));
}

#[test]
fn enumerate_counts() {
    let o = gsg(&["enumerate", "--cap", "3", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 23);
    assert_eq!(v["semigroups"].as_array().unwrap().len(), 23);
    let o = gsg(&["enumerate", "--cap", "9", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_reports_one_based_supports() {
    let o = gsg(&[
        "decompose",
        &fixture("almost_symmetric_non_med.gsg"),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["supports"], serde_json::json!([[1, 2]]));
    let mm = gsg(&["mm", &fixture("almost_symmetric_non_med.gsg")]);
    let o = gsg_stdin(&["decompose", "-", "--format", "json"], &stdout(&mm));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["supports"], serde_json::json!([[1], [2]]));
}
