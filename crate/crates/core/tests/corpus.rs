use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use divisor_lab::corpus::{load_corpus, parse_entries, run_corpus, Summary};
use divisor_lab::poly::EngineConfig;
use divisor_lab::report::Verdict;
use divisor_lab::Error;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn shipped_corpus_parses_with_unique_ids() {
    let entries = load_corpus(&corpus_dir()).unwrap();
    assert!(entries.len() >= 18, "only {} entries", entries.len());
    let ids: BTreeSet<&str> = entries.iter().map(|e| e.id.as_str()).collect();
    assert_eq!(ids.len(), entries.len());
    let sorted: Vec<&str> = entries.iter().map(|e| e.id.as_str()).collect();
    let mut expected = sorted.clone();
    expected.sort();
    assert_eq!(sorted, expected);
    assert!(entries.iter().all(|e| !e.cite.is_empty()));
}

#[test]
fn shipped_corpus_covers_required_sections() {
    let entries = load_corpus(&corpus_dir()).unwrap();
    let cites: String = entries
        .iter()
        .flat_map(|e| std::iter::once(e.cite.clone()).chain(e.checks.iter().map(|c| c.cite.clone())))
        .collect::<Vec<_>>()
        .join("|");
    for needle in [
        "Example 3.7(i)",
        "Example 3.7(ii)",
        "Example 3.7(v)",
        "Example 3.7(vi)",
        "Remark",
        "Prop d(ii)",
        "Example ex1",
        "Cor. n",
        "Example two",
        "Prop pp",
        "Prop pt",
        "Prop 4.1",
        "Obs. 2e",
        "Prop 1d",
        "Prop cl",
        "Prop 612",
    ] {
        assert!(cites.contains(needle), "no entry cites {needle}");
    }
}

#[test]
fn shipped_corpus_has_no_failures() {
    let entries = load_corpus(&corpus_dir()).unwrap();
    let reports = run_corpus(&entries, EngineConfig::default(), 4);
    let summary = Summary::of(&reports);
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .map(|r| format!("{}: {}", r.id, serde_json::Value::Object(r.computed.clone())))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert_eq!(summary.budget_exceeded, 0);
    for r in reports.iter().filter(|r| r.verdict == Verdict::ExternalAssumption) {
        assert!(!r.cite.is_empty(), "{} names no assumed citation", r.id);
    }
}

#[test]
fn duplicate_ids_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let entry = r#"{"id": "same", "cite": "x", "semigroup": {"gens": [2, 3]}, "checks": []}"#;
    std::fs::write(dir.path().join("a.json"), entry).unwrap();
    std::fs::write(dir.path().join("b.json"), entry).unwrap();
    assert!(matches!(load_corpus(dir.path()), Err(Error::DuplicateId(_))));
}

#[test]
fn arrays_of_entries_parse() {
    let text = r#"[{"id": "a", "cite": "x", "semigroup": {"gens": [2, 3]}, "checks": []},
                   {"id": "b", "cite": "y", "semigroup": {"gens": [3, 5]}, "checks": []}]"#;
    assert_eq!(parse_entries(text, "inline.json").unwrap().len(), 2);
}
