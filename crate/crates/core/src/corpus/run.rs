//! Check runner and report aggregation.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{Map, Value as Json};

use super::expr::{containments, Value};
use super::{CheckSpec, Context, CorpusEntry};
use crate::divisorial::{divisorial, sandwich_holds};
use crate::error::{Error, Result};
use crate::homology::ext_annihilator;
use crate::ideals::Ideal;
use crate::poly::{EngineConfig, Monomial};
use crate::report::{CheckReport, Verdict};

pub const CHECK_KINDS: [&str; 8] = [
    "compare",
    "value",
    "route_agreement",
    "idempotence",
    "sandwich",
    "record",
    "assumption",
    "chain_evidence",
];

fn arg_str<'a>(check: &'a CheckSpec, key: &str) -> Result<&'a str> {
    check
        .args
        .get(key)
        .and_then(Json::as_str)
        .ok_or_else(|| Error::Expression(format!("{}: missing string argument `{key}`", check.kind)))
}

fn arg_u32(check: &CheckSpec, key: &str, default: u32) -> u32 {
    check
        .args
        .get(key)
        .and_then(Json::as_u64)
        .map_or(default, |v| v as u32)
}

fn expect_str(expect: &Json, default: &str) -> String {
    expect.as_str().unwrap_or(default).to_string()
}

/// Decides `lhs <relation> rhs`.
fn relation_holds(relation: &str, a: &Value, b: &Value) -> Result<bool> {
    let (sub, sup) = containments(a, b)?;
    match relation {
        "equal" => Ok(sub && sup),
        "not_equal" => Ok(!(sub && sup)),
        "subset" => Ok(sub),
        "strict_subset" => Ok(sub && !sup),
        "not_subset" => Ok(!sub),
        "superset" => Ok(sup),
        other => Err(Error::Expression(format!("unknown expectation `{other}`"))),
    }
}

fn ideal_arg(ctx: &Context, check: &CheckSpec) -> Result<Ideal> {
    match ctx.eval_str(arg_str(check, "ideal")?)? {
        Value::Ideal(i) => Ok(i),
        other => Err(Error::Expression(format!("expected an ideal, got {other}"))),
    }
}

fn evaluate(ctx: &Context, check: &CheckSpec) -> Result<CheckReport> {
    let kind = check.kind.as_str();
    match kind {
        "compare" => {
            let relation = expect_str(&check.expect, "equal");
            let lhs = ctx.eval_str(arg_str(check, "lhs")?)?;
            let rhs = ctx.eval_str(arg_str(check, "rhs")?)?;
            let ok = relation_holds(&relation, &lhs, &rhs)?;
            Ok(CheckReport::new(kind, Verdict::from_bool(ok))
                .with("lhs", &lhs)
                .with("rhs", &rhs))
        }
        "value" => {
            let v = ctx.eval_str(arg_str(check, "expr")?)?;
            let want = check.args.get("value").cloned().unwrap_or(Json::Null);
            let ok = v.to_json() == want;
            let mut rep = CheckReport::new(kind, Verdict::from_bool(ok));
            rep.computed.insert("value".into(), v.to_json());
            rep.expected = want;
            Ok(rep)
        }
        "route_agreement" => {
            let i = ideal_arg(ctx, check)?;
            let colon = divisorial(&i)?;
            let ext = ext_annihilator(&i, colon.grade)?;
            Ok(CheckReport::new(kind, Verdict::from_bool(ext.equals(&colon.d)?))
                .with("grade", colon.grade)
                .with("colon_route", &colon.d)
                .with("ext_route", &ext))
        }
        "idempotence" => {
            let i = ideal_arg(ctx, check)?;
            let d = divisorial(&i)?.d;
            let dd = divisorial(&d)?.d;
            Ok(CheckReport::new(kind, Verdict::from_bool(dd.equals(&d)?))
                .with("D", &d)
                .with("DD", &dd))
        }
        "sandwich" => {
            let i = ideal_arg(ctx, check)?;
            let d = divisorial(&i)?.d;
            Ok(CheckReport::new(kind, Verdict::from_bool(sandwich_holds(&i, &d)?)).with("D", &d))
        }
        "record" => {
            let exprs = check
                .args
                .get("exprs")
                .and_then(Json::as_array)
                .ok_or_else(|| Error::Expression("record: missing `exprs`".into()))?;
            let mut rep = CheckReport::new(kind, Verdict::EvidenceOnly).note("recorded, not asserted");
            for e in exprs {
                let text = e
                    .as_str()
                    .ok_or_else(|| Error::Expression("record: expressions must be strings".into()))?;
                rep.computed.insert(text.to_string(), ctx.eval_str(text)?.to_json());
            }
            Ok(rep)
        }
        "assumption" => {
            let assumes = arg_str(check, "assumes")?;
            let premises = check
                .args
                .get("premises")
                .and_then(Json::as_array)
                .ok_or_else(|| Error::Expression("assumption: missing `premises`".into()))?;
            let mut all = true;
            let mut computed = Map::new();
            for p in premises {
                let lhs = p.get("lhs").and_then(Json::as_str).unwrap_or_default();
                let rhs = p.get("rhs").and_then(Json::as_str).unwrap_or_default();
                let rel = p.get("expect").and_then(Json::as_str).unwrap_or("equal");
                let ok = relation_holds(rel, &ctx.eval_str(lhs)?, &ctx.eval_str(rhs)?)?;
                computed.insert(format!("{lhs} {rel} {rhs}"), Json::Bool(ok));
                all &= ok;
            }
            let verdict = if all { Verdict::ExternalAssumption } else { Verdict::Fail };
            let mut rep = CheckReport::new(kind, verdict).note(format!("assumes: {assumes}"));
            rep.computed = computed;
            Ok(rep)
        }
        "chain_evidence" => chain_evidence(ctx, check),
        other => Err(Error::Expression(format!("unknown check kind `{other}`"))),
    }
}

/// `D(I^k)` for `k ≤ powers`: the chain must descend (strictly when asked),
/// and no monomial of degree `≤ degree` may lie in every member.
fn chain_evidence(ctx: &Context, check: &CheckSpec) -> Result<CheckReport> {
    let i = ideal_arg(ctx, check)?;
    let powers = arg_u32(check, "powers", 5);
    let degree = arg_u32(check, "degree", 5);
    let strict = check.args.get("strict").and_then(Json::as_bool).unwrap_or(false);
    let mut chain: Vec<Ideal> = Vec::new();
    for k in 1..=powers {
        chain.push(divisorial(&i.power(k)?)?.d);
    }
    let mut descending = true;
    for w in chain.windows(2) {
        descending &= w[1].is_subset(&w[0])?;
        if strict {
            descending &= !w[0].is_subset(&w[1])?;
        }
    }
    let n = i.poly_ring().nvars();
    let poly = i.poly_ring().clone();
    let mut witness = None;
    'search: for mono in monomials_up_to(n, degree) {
        let f = poly.monomial(mono);
        for d in &chain {
            if !d.contains(&f)? {
                continue 'search;
            }
        }
        witness = Some(f);
        break;
    }
    let verdict = if descending && witness.is_none() {
        Verdict::EvidenceOnly
    } else {
        Verdict::Fail
    };
    let mut rep = CheckReport::new("chain_evidence", verdict)
        .with("last", chain.last().map(|d| d.to_string()).unwrap_or_default())
        .with("descending", descending)
        .note(format!("finite prefix: powers ≤ {powers}, monomials of degree ≤ {degree}; evidence, not proof"));
    if let Some(w) = witness {
        rep = rep.with("witness", w);
    }
    Ok(rep)
}

fn monomials_up_to(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut frontier = out.clone();
    for _ in 0..degree {
        let mut next = Vec::new();
        for m in &frontier {
            for v in 0..n {
                let mm = m.mul(&Monomial::var(n, v, 1));
                if !next.contains(&mm) {
                    next.push(mm);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Reports for one entry, ids `entry/NN-kind`.
pub fn run_entry(entry: &CorpusEntry, config: EngineConfig) -> Vec<CheckReport> {
    let ctx = entry.context(config);
    entry
        .checks
        .iter()
        .enumerate()
        .map(|(k, check)| {
            let start = Instant::now();
            let outcome = match &ctx {
                Ok(ctx) => evaluate(ctx, check),
                Err(e) => Err(e.clone()),
            };
            let mut rep = match outcome {
                Ok(r) => r,
                Err(e) => {
                    let mut r = CheckReport::new(&check.kind, Verdict::Fail);
                    r.computed.insert("error".into(), Json::String(e.to_string()));
                    r
                }
            };
            rep.id = format!("{}/{:02}-{}", entry.id, k, check.kind);
            rep.kind = check.kind.clone();
            if rep.expected.is_null() {
                rep.expected = check.expect.clone();
            }
            rep.cite = if check.cite.is_empty() {
                entry.cite.clone()
            } else {
                check.cite.clone()
            };
            if !check.notes.is_empty() {
                let own = std::mem::take(&mut rep.notes);
                rep.notes = check.notes.clone();
                if !own.is_empty() {
                    rep = rep.note(own);
                }
            }
            rep.millis = start.elapsed().as_millis() as u64;
            rep
        })
        .collect()
}

/// Runs every entry on a bounded worker pool; reports come back sorted by id.
pub fn run_corpus(entries: &[CorpusEntry], config: EngineConfig, threads: usize) -> Vec<CheckReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    let mut reports: Vec<CheckReport> = pool.install(|| {
        entries
            .par_iter()
            .flat_map_iter(|e| run_entry(e, config))
            .collect()
    });
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub by_verdict: BTreeMap<Verdict, usize>,
    /// Checks that stopped on the Groebner pair budget.
    pub budget_exceeded: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Summary {
        let mut s = Summary {
            total: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            *s.by_verdict.entry(r.verdict).or_default() += 1;
            let budget = r
                .computed
                .get("error")
                .and_then(Json::as_str)
                .is_some_and(|e| e.starts_with("Groebner basis computation exceeded"));
            if budget {
                s.budget_exceeded += 1;
            }
        }
        s
    }

    pub fn failures(&self) -> usize {
        self.by_verdict.get(&Verdict::Fail).copied().unwrap_or(0)
    }
}

/// Section of a citation: the text before its first parenthesis.
pub fn section_of(cite: &str) -> String {
    cite.split('(').next().unwrap_or(cite).trim().to_string()
}

/// Verdict counts per cited section.
pub fn cross_tabulate(reports: &[CheckReport]) -> BTreeMap<String, BTreeMap<Verdict, usize>> {
    let mut table: BTreeMap<String, BTreeMap<Verdict, usize>> = BTreeMap::new();
    for r in reports {
        *table.entry(section_of(&r.cite)).or_default().entry(r.verdict).or_default() += 1;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_entries;

    const ENTRY: &str = r#"{
        "id": "grade-one", "cite": "Example 1(i)",
        "ring": {"vars": ["x", "y"], "field": {"kind": "Q"}},
        "ideals": {"I": ["x^2", "x*y"], "J": ["x^2", "y"]},
        "checks": [
            {"kind": "compare", "args": {"lhs": "D(I)", "rhs": "(x)"}, "expect": "equal"},
            {"kind": "compare", "args": {"lhs": "(x)", "rhs": "D(J)"}, "expect": "not_subset"},
            {"kind": "value", "args": {"expr": "grade(J)", "value": 2}, "expect": "value"},
            {"kind": "route_agreement", "args": {"ideal": "I"}},
            {"kind": "idempotence", "args": {"ideal": "J"}},
            {"kind": "sandwich", "args": {"ideal": "I"}},
            {"kind": "record", "args": {"exprs": ["betti(I)"]}},
            {"kind": "assumption", "args": {"assumes": "a cited fact",
                "premises": [{"lhs": "I", "rhs": "D(I)", "expect": "strict_subset"}]}},
            {"kind": "chain_evidence", "args": {"ideal": "J", "powers": 3, "degree": 2}},
            {"kind": "compare", "args": {"lhs": "D(I)", "rhs": "(y)"}, "expect": "equal"}
        ]
    }"#;

    #[test]
    fn verdicts_of_each_kind() {
        let entries = parse_entries(ENTRY, "mem").unwrap();
        let reports = run_corpus(&entries, EngineConfig::default(), 2);
        let verdicts: Vec<Verdict> = reports.iter().map(|r| r.verdict).collect();
        use Verdict::*;
        assert_eq!(
            verdicts,
            vec![Pass, Pass, Pass, Pass, Pass, Pass, EvidenceOnly, ExternalAssumption, EvidenceOnly, Fail]
        );
        assert_eq!(reports[0].id, "grade-one/00-compare");
        assert_eq!(reports[0].cite, "Example 1(i)");
        let s = Summary::of(&reports);
        assert_eq!(s.failures(), 1);
        let table = cross_tabulate(&reports);
        assert_eq!(table["Example 1"][&Pass], 6);
    }
}
