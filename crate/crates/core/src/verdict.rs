//! Outcome records for property and conjecture checks.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
}

/// Result of a check. A counterexample payload is present iff the outcome is
/// [`Outcome::Fail`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub method: String,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub detail: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Verdict {
    pub fn pass(method: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Pass,
            method: method.into(),
            detail: Map::new(),
            counterexample: None,
        }
    }

    pub fn fail(method: impl Into<String>, counterexample: Value) -> Self {
        Verdict {
            outcome: Outcome::Fail,
            method: method.into(),
            detail: Map::new(),
            counterexample: Some(counterexample),
        }
    }

    pub fn undecided(method: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Undecided,
            method: method.into(),
            detail: Map::new(),
            counterexample: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.detail.insert(
            key.to_string(),
            serde_json::to_value(value).unwrap_or(Value::Null),
        );
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}
