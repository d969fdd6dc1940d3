//! Reduction rules for path decompositions of planar graphs.
//!
//! A connected planar graph is either small enough for the exact oracle, or
//! has a reducible configuration: a pair of vertices of degree at most 4, or
//! a family of four degree-5 vertices with a rooted subdivision. Each
//! configuration maps to a rule of the catalog in `catalog/rules.json`. The
//! rule deletes the configuration, the reduced graph is decomposed
//! recursively, and the coloring is lifted back with at most one new color
//! per two deleted vertices.
//!
//! [`decompose`] drives the recursion and records every step in a
//! [`Trace`].

mod catalog;
mod ci;
mod cii;
mod decompose;
mod lift;
mod program;
mod reduce;
mod search;
mod trace;

use std::collections::BTreeMap;

use serde::Serialize;
use subdivision::{InactivationTarget, Subdivision};

pub use catalog::{catalog, check_catalog, check_matcher, Catalog, Constraint, Family, Recoloring, Rule};
pub use ci::match_ci_rule;
pub use cii::select_cii_composite;
pub use decompose::{decompose, exceptional_coloring, recolor, Decomposition, Options};
pub use lift::safety_recolor;
pub use program::{diff_program, run_program, Primitive, RecoloringProgram};
pub use reduce::{apply_rule, apply_rule_with, Reduction};
pub use trace::{FiringChecks, Trace, TraceStep};

/// Largest share of instances in a corpus run that may end in a fallback
/// (an unmatched case finished by the exact oracle or the greedy cover).
/// Measured runs sit at 0.
pub const MAX_FALLBACK_RATIO: f64 = 0.01;

/// A concrete edit of the reduced graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Edit {
    /// Adds `ab`, standing for the walk a, via..., b through special
    /// vertices.
    Shortcut { a: usize, b: usize, via: Vec<usize> },
    Add(usize, usize),
    Remove(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MatchContext {
    None,
    /// The path a composite colors with its new color.
    Path(Vec<usize>),
    /// The subdivision of a four-vertex family and the inactivation
    /// targets its 2-coloring should meet.
    Subdivision {
        s: Subdivision,
        targets: Vec<InactivationTarget>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleMatch {
    pub rule_id: String,
    pub binding: BTreeMap<String, usize>,
    /// Vertices the reduction deletes.
    pub special: Vec<usize>,
    pub context: MatchContext,
    pub edits: Vec<Edit>,
    /// Edits the engine may also drop.
    pub optional_edits: Vec<Edit>,
    /// The branches taken to reach the rule.
    pub transcript: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("no rule matches ({})", .0.last().map(String::as_str).unwrap_or(""))]
    UnmatchedCase(Vec<String>),
    #[error("rule {rule}: the reduced graph is not planar")]
    PlanarityLost { rule: String },
    #[error("rule {rule}: {reason}")]
    BadEdit { rule: String, reason: String },
    #[error("recoloring failed for {rule}: {reason}")]
    RecoloringInvalid { rule: String, reason: String },
    #[error("{0}")]
    InvalidInput(String),
}
