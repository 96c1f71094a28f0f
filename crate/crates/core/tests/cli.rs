use std::io::Write;
use std::process::{Command, Output, Stdio};

use curvesing::pipeline::exit;
use curvesing::report::Report;

fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn curvesing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvesing"))
        .args(args)
        .output()
        .unwrap()
}

fn with_input(text: &str, args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_curvesing"));
    cmd.arg("classify").arg("-").args(args);
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn machine_report_for_the_nodal_cubic() {
    let o = curvesing(&["classify", &data_path("nodal_cubic.txt"), "--format", "machine", "--verify"]);
    assert_eq!(code(&o), exit::OK);
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.degree, 3);
    assert_eq!(r.singularities.len(), 1);
    assert_eq!(r.singularities[0].point.display(), "(0:0:1)");
    assert!(r.verification.unwrap().all_agree);
}

#[test]
fn text_report_sections() {
    let o = curvesing(&["classify", &data_path("ellipse.txt")]);
    assert_eq!(code(&o), exit::OK);
    let text = stdout(&o);
    for section in ["input", "limit point", "T-function", "singularities (0)", "genus audit", "warnings"] {
        assert!(text.contains(section), "missing {section}");
    }
    assert!(text.contains("CriticalPoint"));
}

#[test]
fn report_and_samples_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let csv = dir.path().join("points.csv");
    let o = curvesing(&[
        "classify",
        &data_path("unreachable_limit.txt"),
        "--sample",
        "-2:2:5",
        "--sample-out",
        csv.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(code(&o), exit::OK, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let r = Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.samples.as_ref().unwrap().skipped, 1);
    let csv = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv.lines().next(), Some("t,x1,x2"));
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn theta_override() {
    let o = curvesing(&["classify", &data_path("nodal_cubic.txt"), "--theta", "-3/2", "--format", "machine"]);
    assert_eq!(code(&o), exit::OK);
    assert_eq!(Report::from_json(&stdout(&o)).unwrap().limit_point.theta, "-3/2");
    // the node is P(1), not a simple point
    let o = curvesing(&["classify", &data_path("nodal_cubic.txt"), "--theta", "1"]);
    assert_eq!(code(&o), exit::FAILURE);
}

#[test]
fn space_flag_on_plane_input() {
    let o = curvesing(&["classify", &data_path("nodal_cubic.txt"), "--space", "--format", "machine"]);
    assert_eq!(code(&o), exit::OK);
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.route, "space");
    assert_eq!(r.t_function.kind, "T_E");
    assert_eq!(r.singularities.len(), 1);
}

#[test]
fn space_input_with_verification() {
    let o = curvesing(&["classify", &data_path("space_triple_point.txt"), "--verify"]);
    assert_eq!(code(&o), exit::OK);
    assert!(stdout(&o).contains("(0:0:0:1)  classifier 3  oracle 3  ok"));
}

#[test]
fn exit_codes() {
    let o = with_input("t^2 - 1;;", &[], None);
    assert_eq!(code(&o), exit::PARSE);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:9: empty component"));
    assert_eq!(code(&with_input("x^2-1; t; 1", &[], None)), exit::PARSE);
    assert_eq!(code(&with_input("t^2; t^4; 1", &[], None)), exit::NOT_PROPER);
    assert_eq!(code(&with_input("t; t+1; 1", &[], None)), exit::DEGENERATE);
    assert_eq!(code(&with_input("0; 0; 0", &[], None)), exit::DEGENERATE);
    let cap = Some(("CURVESING_DEGREE_CAP", "1"));
    assert_eq!(code(&with_input("t^2-1; t^3-t; 1", &[], cap)), exit::DEGREE_CAP);
    assert_eq!(code(&with_input("t^2-1; t^3-t; 1", &[], Some(("CURVESING_DEGREE_CAP", "x")))), exit::USAGE);
    assert_eq!(code(&curvesing(&["classify", "/nonexistent/curve.txt"])), exit::IO);
    assert_eq!(code(&curvesing(&["classify", &data_path("ellipse.txt"), "--sample", "0:1:1"])), exit::USAGE);
}
