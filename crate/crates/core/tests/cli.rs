use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use vcbound::report::Report;

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/illustration.el")
}

fn vcbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn text_report_ends_with_bracket() {
    let out = vcbound(&[fixture().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last(), Some("5 <= beta(G) <= 7"));
}

#[test]
fn trace_lines_in_order() {
    let out = vcbound(&[fixture().to_str().unwrap(), "--trace"]);
    let text = stdout(&out);
    let moves: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("enter ") || l.starts_with("exit "))
        .collect();
    assert_eq!(moves, ["enter x", "enter h", "enter y", "exit f"]);
}

fn strip_timings(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let f = fixture();
    let args = [
        f.to_str().unwrap(),
        "--json",
        "--trace",
        "--baselines",
        "--exact",
    ];
    let a = stdout(&vcbound(&args));
    let b = stdout(&vcbound(&args));
    let strip = |s: &str| serde_json::to_string(&strip_timings(s)).unwrap();
    assert_eq!(strip(&a), strip(&b));

    let report: Report = serde_json::from_str(&a).unwrap();
    assert_eq!(report.report_version, 1);
    assert_eq!((report.eega.lower, report.eega.upper), (5, 7));
    assert_eq!(report.eega.cover, ["i", "j", "b", "c", "x", "h", "y"]);
    assert_eq!(report.exact.as_ref().unwrap().beta, 7);
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, a);

    // top-level keys appear in schema order
    let first: Vec<usize> = [
        "report_version",
        "graph",
        "eega",
        "baselines",
        "exact",
        "timings",
    ]
    .iter()
    .map(|k| a.find(&format!("\"{k}\"")).unwrap())
    .collect();
    assert!(first.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn dimacs_input() {
    let p = scratch("p3.dimacs", "c path\np edge 3 2\ne 1 2\ne 2 3\n");
    let out = vcbound(&[p.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last(), Some("1 <= beta(G) <= 1"));
    // explicit format overrides the extension
    let q = scratch("p3.txt", "p edge 3 2\ne 1 2\ne 2 3\n");
    let out = vcbound(&[q.to_str().unwrap(), "--format", "dimacs"]);
    assert!(out.status.success());
}

#[test]
fn parse_error_exits_1() {
    let p = scratch("bad.el", "e a b\ne a a\n");
    let out = vcbound(&[p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let missing = vcbound(&["/nonexistent/graph.el"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn oracle_refusal_exits_2() {
    let out = vcbound(&[fixture().to_str().unwrap(), "--exact=5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).lines().last(), Some("5 <= beta(G) <= 7"));
}

#[test]
fn edgeless_graph() {
    let p = scratch("edgeless.el", "vertices a b c\n");
    let out = vcbound(&[p.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last(), Some("0 <= beta(G) <= 0"));
}

#[test]
fn seed_docs_prints_schema() {
    let out = vcbound(&["--seed-docs"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"report_version\": 1"));
}
