use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Checks run on every rule firing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiringChecks {
    /// G' is planar.
    pub planar: bool,
    /// Every color class of the lifted coloring is a path.
    pub path_valid: bool,
    /// New colors stay within half the number of removed vertices.
    pub within_budget: bool,
    /// G' has fewer vertices than G.
    pub shrinks: bool,
}

impl FiringChecks {
    pub fn all(&self) -> bool {
        self.planar && self.path_valid && self.within_budget && self.shrinks
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule_id: String,
    /// Roles mapped to vertex ids of the input graph.
    pub binding: BTreeMap<String, usize>,
    /// Vertices of the graph the step worked on.
    pub n: usize,
    /// Colors of the reduced graph's coloring (0 for leaves).
    pub budget_before: usize,
    /// Colors after lifting.
    pub budget_after: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fallback: Option<String>,
    #[serde(default)]
    pub variant: usize,
    #[serde(default)]
    pub release: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<FiringChecks>,
    /// Set on steps recording a configuration no rule matched; the engine
    /// went on with another pair or family.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unmatched: Option<String>,
}

/// Steps in the order they completed: a firing appears after the steps
/// that colored its reduced graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }

    pub fn parse(text: &str) -> Result<Trace, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Rule firings, leaving out oracle leaves, exceptional components and
    /// fallbacks.
    pub fn firings(&self) -> impl Iterator<Item = &TraceStep> {
        self.steps.iter().filter(|s| s.checks.is_some())
    }

    pub fn fallbacks(&self) -> usize {
        self.steps.iter().filter(|s| s.fallback.is_some()).count()
    }

    /// Number of firings per rule id.
    pub fn rule_histogram(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for s in self.firings() {
            *out.entry(s.rule_id.clone()).or_insert(0) += 1;
        }
        out
    }
}
