//! Result types for identity verification. A report records what was
//! checked, how strong the conclusion is, and, for refutations, the
//! minimal counterexample together with both evaluated sides.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Strength of a verification outcome.
///
/// ProvedAllN means the difference of the two sides was placed in the
/// exponential-polynomial normal form and shown to vanish on a window
/// that decides vanishing for every n. GridVerified means equality was
/// checked exactly on a finite grid only. Refuted means a concrete index
/// where the two sides differ was found, and the reported one is minimal.
#[derive(Serialize, Deserialize, Copy, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ProvedAllN,
    GridVerified,
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Verdict::ProvedAllN => "proved-all-n",
            Verdict::GridVerified => "grid-verified",
            Verdict::Refuted => "refuted",
        };
        f.write_str(text)
    }
}

/// Outcome of checking one identity.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub verdict: Verdict,
    /// Human-readable statement of what was checked (grid ranges or
    /// normal-form degree and sample window).
    pub bound: String,
    /// Index assignment at the first failure, keyed by variable name.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<BTreeMap<String, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl IdentityReport {
    pub fn verified(name: &str, verdict: Verdict, bound: String) -> Self {
        IdentityReport {
            name: name.to_string(),
            verdict,
            bound,
            counterexample: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn refuted(
        name: &str,
        bound: String,
        counterexample: BTreeMap<String, u64>,
        lhs: String,
        rhs: String,
    ) -> Self {
        IdentityReport {
            name: name.to_string(),
            verdict: Verdict::Refuted,
            bound,
            counterexample: Some(counterexample),
            lhs: Some(lhs),
            rhs: Some(rhs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_serialize_in_kebab_case() {
        let json = serde_json::to_string(&Verdict::ProvedAllN).unwrap();
        assert_eq!(json, "\"proved-all-n\"");
        let json = serde_json::to_string(&Verdict::GridVerified).unwrap();
        assert_eq!(json, "\"grid-verified\"");
    }

    #[test]
    fn clean_reports_omit_counterexample_fields() {
        let report = IdentityReport::verified("demo", Verdict::ProvedAllN, "degree 1".into());
        let json = serde_json::to_string(&report).unwrap();
        assert!(!json.contains("counterexample"));
        assert!(!json.contains("lhs"));

        let mut at = BTreeMap::new();
        at.insert("n".to_string(), 0);
        let report = IdentityReport::refuted("demo", "degree 1".into(), at, "a".into(), "b".into());
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"counterexample\":{\"n\":0}"));
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
