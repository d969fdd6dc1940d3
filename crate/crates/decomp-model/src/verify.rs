use graph_core::{Edge, Graph};

use crate::shape::{classify_class, InvalidReason, ShapeKind};
use crate::{EdgeColoring, ModelError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationRule {
    Cycle,
    NotAPath(InvalidReason),
    OverBudget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: ViolationRule,
    pub color: Option<usize>,
    pub witness_edges: Vec<Edge>,
    pub witness_vertices: Vec<usize>,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = self.color.unwrap_or(usize::MAX);
        match &self.rule {
            ViolationRule::Cycle => write!(f, "color {c} is a cycle"),
            ViolationRule::NotAPath(InvalidReason::Branching(v)) => {
                write!(f, "color {c} branches at vertex {v}")
            }
            ViolationRule::NotAPath(InvalidReason::Disconnected) => {
                write!(f, "color {c} is disconnected")
            }
            ViolationRule::NotAPath(r) => write!(f, "color {c} is not a path ({r:?})"),
            ViolationRule::OverBudget => write!(
                f,
                "{} colors used, budget is {}",
                self.witness_vertices[0], self.witness_vertices[1]
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub color_count: usize,
    pub budget: Option<usize>,
}

impl VerifyReport {
    fn from(violations: Vec<Violation>, color_count: usize, budget: Option<usize>) -> Self {
        VerifyReport {
            ok: violations.is_empty(),
            violations,
            color_count,
            budget,
        }
    }
}

/// Checks that every class is a path (or a cycle, when allowed).
pub fn verify_path_coloring(
    g: &Graph,
    c: &EdgeColoring,
    allow_cycles: bool,
) -> Result<VerifyReport, ModelError> {
    if !c.covers(g) {
        return Err(ModelError::ColoringDomainMismatch);
    }
    let mut violations = Vec::new();
    for (color, class) in c.classes().into_iter().enumerate() {
        let shape = classify_class(&class);
        let rule = match shape.kind {
            ShapeKind::Path => continue,
            ShapeKind::Cycle if allow_cycles => continue,
            ShapeKind::Cycle => ViolationRule::Cycle,
            ShapeKind::Invalid => ViolationRule::NotAPath(shape.invalid.unwrap()),
        };
        let witness_vertices = match rule {
            ViolationRule::NotAPath(InvalidReason::Branching(v)) => vec![v],
            _ => shape.vertex_sequence.clone(),
        };
        violations.push(Violation {
            rule,
            color: Some(color),
            witness_edges: class,
            witness_vertices,
        });
    }
    Ok(VerifyReport::from(violations, c.num_colors(), None))
}

/// Path coloring with at most ⌊n/2⌋ colors, or ⌈n/2⌉ when `relaxed`.
pub fn verify_good_coloring(
    g: &Graph,
    c: &EdgeColoring,
    relaxed: bool,
) -> Result<VerifyReport, ModelError> {
    let mut report = verify_path_coloring(g, c, false)?;
    let budget = if relaxed { g.n().div_ceil(2) } else { g.n() / 2 };
    if c.num_colors() > budget {
        report.violations.push(Violation {
            rule: ViolationRule::OverBudget,
            color: None,
            witness_edges: Vec::new(),
            witness_vertices: vec![c.num_colors(), budget],
        });
    }
    Ok(VerifyReport::from(report.violations, c.num_colors(), Some(budget)))
}
