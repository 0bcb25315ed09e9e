//! Verification corpus: JSON entries describing a ring, named ideals and
//! checks, plus the expression language the checks are written in.

pub mod expr;
pub mod run;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::ideals::{AmbientRing, Ideal};
use crate::poly::{parse_generator_list, EngineConfig, MonomialOrder, PolyRing};
use crate::semigroup::NumericalSemigroup;

pub use run::{cross_tabulate, run_corpus, run_entry, Summary};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp { p } => Field::prime(*p),
        }
    }
}

fn default_order() -> String {
    "grevlex".to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub vars: Vec<String>,
    pub field: FieldSpec,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
}

pub fn parse_order(text: &str) -> Result<MonomialOrder> {
    match text {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(Error::syntax(0, format!("unknown monomial order `{other}`"))),
    }
}

impl RingSpec {
    pub fn build(&self, config: EngineConfig) -> Result<Arc<AmbientRing>> {
        let poly = PolyRing::with_config(
            self.vars.clone(),
            self.field.to_field()?,
            parse_order(&self.order)?,
            config,
        )?;
        if self.relations.is_empty() {
            return Ok(AmbientRing::polynomial(poly));
        }
        let rels = self
            .relations
            .iter()
            .map(|r| poly.parse(r))
            .collect::<Result<Vec<_>>>()?;
        AmbientRing::quotient(poly, rels)
    }

    /// Parses `QQ[x,y]`, `GF(2)[x,y,z]` or `QQ[x,y]/(x^2, x*y)`.
    pub fn from_text(text: &str, order: &str) -> Result<RingSpec> {
        let t = text.trim();
        let open = t
            .find('[')
            .ok_or_else(|| Error::syntax(0, "expected `[` after the field"))?;
        let close = t[open..]
            .find(']')
            .map(|i| i + open)
            .ok_or_else(|| Error::syntax(open, "unclosed `[`"))?;
        let field = match t[..open].trim() {
            "QQ" | "Q" => FieldSpec::Q,
            f => {
                let inner = f
                    .strip_prefix("GF(")
                    .or_else(|| f.strip_prefix("F("))
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::syntax(0, format!("unknown field `{f}`")))?;
                let p = inner
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::syntax(0, format!("bad characteristic `{inner}`")))?;
                FieldSpec::Fp { p }
            }
        };
        let vars: Vec<String> = t[open + 1..close]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        let rest = t[close + 1..].trim();
        let relations = if rest.is_empty() {
            Vec::new()
        } else {
            let rels = rest
                .strip_prefix('/')
                .ok_or_else(|| Error::syntax(close + 1, "expected `/` before relations"))?
                .trim();
            let inner = rels
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::syntax(close + 1, "relations must be parenthesised"))?;
            split_top_level(inner)
        };
        Ok(RingSpec {
            vars,
            field,
            relations,
            order: order.to_string(),
        })
    }
}

/// Splits on commas outside brackets.
pub(crate) fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// A named ideal: either a generator list, or the elimination of some
/// variables from an ideal of a larger polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Gens(Vec<String>),
    Eliminate { eliminate: Vec<String>, gens: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSpec {
    pub gens: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub kind: String,
    #[serde(default)]
    pub args: serde_json::Map<String, serde_json::Value>,
    #[serde(default)]
    pub expect: serde_json::Value,
    #[serde(default)]
    pub cite: String,
    #[serde(default)]
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub cite: String,
    #[serde(default)]
    pub ring: Option<RingSpec>,
    #[serde(default)]
    pub ideals: BTreeMap<String, IdealSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, String>,
    #[serde(default)]
    pub semigroup: Option<SemigroupSpec>,
    pub checks: Vec<CheckSpec>,
    #[serde(default)]
    pub notes: String,
}

/// An entry with its ring, ideals and semigroup built.
pub struct Context {
    pub ring: Option<Arc<AmbientRing>>,
    pub ideals: BTreeMap<String, Ideal>,
    pub modules: BTreeMap<String, String>,
    pub semigroup: Option<Arc<NumericalSemigroup>>,
}

impl CorpusEntry {
    pub fn context(&self, config: EngineConfig) -> Result<Context> {
        let ring = self.ring.as_ref().map(|r| r.build(config)).transpose()?;
        let mut ideals = BTreeMap::new();
        for (name, spec) in &self.ideals {
            let ring = ring.as_ref().ok_or_else(|| Error::Schema {
                path: self.id.clone(),
                field: format!("ideals.{name} needs a ring"),
            })?;
            let ideal = match spec {
                IdealSpec::Gens(gens) => {
                    let polys = gens
                        .iter()
                        .map(|g| ring.parse_poly(g))
                        .collect::<Result<Vec<_>>>()?;
                    Ideal::new(ring, polys)?
                }
                IdealSpec::Eliminate { eliminate, gens } => eliminated(ring, eliminate, gens)?,
            };
            ideals.insert(name.clone(), ideal);
        }
        let semigroup = self
            .semigroup
            .as_ref()
            .map(|s| NumericalSemigroup::new(&s.gens))
            .transpose()?;
        Ok(Context {
            ring,
            ideals,
            modules: self.modules.clone(),
            semigroup,
        })
    }

    fn validate(&self, path: &str) -> Result<()> {
        let schema = |field: String| Error::Schema {
            path: path.to_string(),
            field,
        };
        if self.id.trim().is_empty() {
            return Err(schema("id".into()));
        }
        if self.cite.trim().is_empty() {
            return Err(schema(format!("{}.cite", self.id)));
        }
        if !self.ideals.is_empty() && self.ring.is_none() {
            return Err(schema(format!("{}.ring", self.id)));
        }
        for (k, check) in self.checks.iter().enumerate() {
            if !run::CHECK_KINDS.contains(&check.kind.as_str()) {
                return Err(schema(format!("{}.checks[{k}].kind", self.id)));
            }
            for name in expr::referenced_names(check) {
                let known = self.ideals.contains_key(&name)
                    || self.modules.contains_key(&name)
                    || expr::is_builtin_name(&name)
                    || self.ring.as_ref().is_some_and(|r| r.vars.contains(&name));
                if !known {
                    return Err(schema(format!("{}.checks[{k}] references undefined `{name}`", self.id)));
                }
            }
        }
        Ok(())
    }
}

/// `I ∩ k[remaining]` for `I` given in the ring with `eliminate` prepended,
/// renamed into `ring`.
fn eliminated(ring: &Arc<AmbientRing>, eliminate: &[String], gens: &[String]) -> Result<Ideal> {
    let poly = ring.poly();
    let mut vars = eliminate.to_vec();
    vars.extend(poly.vars().iter().cloned());
    let big = AmbientRing::polynomial(PolyRing::with_config(
        vars,
        poly.field(),
        poly.order().clone(),
        poly.config(),
    )?);
    let text = gens.join(", ");
    let ideal = Ideal::new(&big, parse_generator_list(&text, big.poly())?)?;
    let names: Vec<&str> = eliminate.iter().map(|s| s.as_str()).collect();
    ideal.eliminate(&names)?.rename_into(ring)
}

/// Parses one JSON document holding an entry or an array of entries.
pub fn parse_entries(text: &str, path: &str) -> Result<Vec<CorpusEntry>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Schema {
        path: path.to_string(),
        field: e.to_string(),
    })?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    let mut out = Vec::new();
    for item in items {
        let entry: CorpusEntry = serde_json::from_value(item).map_err(|e| Error::Schema {
            path: path.to_string(),
            field: e.to_string(),
        })?;
        entry.validate(path)?;
        out.push(entry);
    }
    Ok(out)
}

/// Loads a file or every `*.json` file of a directory; entries sorted by id.
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let mut files = Vec::new();
    if path.is_dir() {
        for item in std::fs::read_dir(path).map_err(io)? {
            let p = item.map_err(io)?.path();
            if p.extension().is_some_and(|e| e == "json") {
                files.push(p);
            }
        }
        files.sort();
    } else {
        files.push(path.to_path_buf());
    }
    let mut entries = Vec::new();
    for f in files {
        let text = std::fs::read_to_string(&f).map_err(|e| Error::Io(format!("{}: {e}", f.display())))?;
        entries.extend(parse_entries(&text, &f.display().to_string())?);
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    for w in entries.windows(2) {
        if w[0].id == w[1].id {
            return Err(Error::DuplicateId(w[0].id.clone()));
        }
    }
    Ok(entries)
}
