use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::Provenance;

/// A scalar or list compared between prediction and computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Bool(bool),
    Int(i64),
    List(Vec<i64>),
    Text(String),
}

impl From<bool> for Quantity {
    fn from(b: bool) -> Self {
        Quantity::Bool(b)
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Int(v)
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Int(v as i64)
    }
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(v as i64)
    }
}

impl From<Vec<i64>> for Quantity {
    fn from(v: Vec<i64>) -> Self {
        Quantity::List(v)
    }
}

impl From<&str> for Quantity {
    fn from(s: &str) -> Self {
        Quantity::Text(s.to_string())
    }
}

impl From<String> for Quantity {
    fn from(s: String) -> Self {
        Quantity::Text(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Predicted and computed quantities for one theorem instance. The verdict
/// is `pass` exactly when every predicted key has an equal computed value.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instance: String,
    pub predicted: BTreeMap<String, Quantity>,
    pub computed: BTreeMap<String, Quantity>,
    pub provenance: BTreeMap<String, Provenance>,
    pub details: BTreeMap<String, Quantity>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn new(theorem: &str, instance: impl Into<String>) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            instance: instance.into(),
            predicted: BTreeMap::new(),
            computed: BTreeMap::new(),
            provenance: BTreeMap::new(),
            details: BTreeMap::new(),
            verdict: Verdict::Fail,
            skip_reason: None,
            timing_ms: 0,
        }
    }

    pub fn predict(&mut self, key: &str, value: impl Into<Quantity>, provenance: Provenance) -> &mut Self {
        self.predicted.insert(key.to_string(), value.into());
        self.provenance.insert(key.to_string(), provenance);
        self
    }

    pub fn compute(&mut self, key: &str, value: impl Into<Quantity>) -> &mut Self {
        self.computed.insert(key.to_string(), value.into());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Quantity>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Predicted keys whose computed value is missing or different.
    pub fn mismatches(&self) -> Vec<&str> {
        self.predicted
            .iter()
            .filter(|(k, v)| self.computed.get(*k) != Some(v))
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn finish(mut self) -> Self {
        if self.skip_reason.is_none() {
            self.verdict = if self.mismatches().is_empty() { Verdict::Pass } else { Verdict::Fail };
        }
        self
    }

    pub fn skipped(theorem: &str, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = VerificationReport::new(theorem, instance);
        r.verdict = Verdict::Skipped;
        r.skip_reason = Some(reason.into());
        r
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
