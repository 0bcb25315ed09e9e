//! Structured outcomes of verification checks.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Finite-prefix or degree-bounded evidence for a statement that is not decided exactly.
    EvidenceOnly,
    /// The final step rests on a cited result that is not recomputed.
    ExternalAssumption,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::EvidenceOnly => "evidence-only",
            Verdict::ExternalAssumption => "external-assumption",
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub kind: String,
    pub verdict: Verdict,
    pub computed: Map<String, Value>,
    pub expected: Value,
    pub notes: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub cite: String,
    pub millis: u64,
}

impl CheckReport {
    pub fn new(kind: &str, verdict: Verdict) -> CheckReport {
        CheckReport {
            id: String::new(),
            kind: kind.to_string(),
            verdict,
            computed: Map::new(),
            expected: Value::Null,
            notes: String::new(),
            cite: String::new(),
            millis: 0,
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> CheckReport {
        self.computed
            .insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> CheckReport {
        let text = text.into();
        if self.notes.is_empty() {
            self.notes = text;
        } else {
            self.notes = format!("{}; {}", self.notes, text);
        }
        self
    }
}
