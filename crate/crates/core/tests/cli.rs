use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_divisor-lab"))
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn divisorial_prints_d() {
    let o = run(&["divisorial", "--ring", "QQ[x,y]", "x^2, x*y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "D = (x)");
}

#[test]
fn divisorial_both_routes() {
    let o = run(&["divisorial", "--route", "both", "x^2, y"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("D = (x^2, y)"), "{text}");
    assert!(text.contains("routes agree: true"), "{text}");
}

#[test]
fn json_divisorial() {
    let o = run(&["--format", "json", "divisorial", "x^2, x*y"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["D"], "(x)");
    assert_eq!(v["grade"], 1);
}

#[test]
fn semigroup_divisorial() {
    let o = run(&["semigroup", "5", "6", "14", "--op", "divisorial", "--ideal", "10,11,12,19"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "{10,11,12} ∪ [14,∞)");
}

#[test]
fn ideal_verbs() {
    assert_eq!(stdout(&run(&["colon", "x^2, x*y", "x"])).trim(), "(x, y)");
    assert_eq!(stdout(&run(&["intersect", "x", "y"])).trim(), "(x*y)");
    assert_eq!(stdout(&run(&["betti", "x^2, x*y, y^2"])).trim(), "1 3 2");
    assert_eq!(stdout(&run(&["intclosure", "x^2, y^3"])).trim(), "(x*y^2, y^3, x^2)");
    let gb = stdout(&run(&["--ring", "QQ[x,y,z]", "gb", "x*y - z, y^2"]));
    assert!(gb.lines().any(|l| l == "z^2"), "{gb}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["divisorial", "x^2 +"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--ring", "QQ[x,y", "gb", "x"]).status.code(), Some(2));
    assert_eq!(run(&["--budget", "1", "gb", "x^3 - y, x*y^2 - x, y^3 - x^2"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_shipped_corpus() {
    let dir = corpus_dir();
    let o = run(&["verify", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.lines().any(|l| l.starts_with("fail ")), "{text}");
    assert!(text.lines().last().unwrap().contains("checks: pass"), "{text}");
}

#[test]
fn verify_reports_failures_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"id": "bad", "cite": "local", "ring": {"vars": ["x", "y"], "field": {"kind": "Q"}},
            "ideals": {"I": ["x^2", "x*y"]},
            "checks": [{"kind": "compare", "args": {"lhs": "D(I)", "rhs": "I"}, "expect": "equal"}]}"#,
    )
    .unwrap();
    let o = run(&["--format", "json", "verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["verdict"], "fail");
    for key in ["id", "kind", "verdict", "computed", "expected", "notes", "millis"] {
        assert!(v[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn schema_errors_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"id": "bad", "cite": "x", "ring": {"vars": ["x"], "field": {"kind": "Q"}},
            "checks": [{"kind": "compare", "args": {"lhs": "D(J)", "rhs": "J"}, "expect": "equal"}]}"#,
    )
    .unwrap();
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn report_cross_tabulates_saved_json() {
    let dir = tempfile::tempdir().unwrap();
    let saved = dir.path().join("report.json");
    let corpus = corpus_dir();
    let o = run(&["--format", "json", "verify", corpus.to_str().unwrap(), "--output", saved.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["report", saved.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Example 3.7"), "{text}");
    assert!(text.contains("Prop 612"), "{text}");
}
