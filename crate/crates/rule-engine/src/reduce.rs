use graph_core::{edge, is_planar, Edge, Graph};

use crate::{Edit, MatchContext, RuleError, RuleMatch};

/// A reduced graph G' together with what is needed to lift a coloring of it
/// back to G. G' keeps the vertex ids of G; the special vertices are
/// isolated in it.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub special: Vec<usize>,
    /// Added edges that stand for a walk through special vertices, with the
    /// full walk from one end to the other.
    pub shortcuts: Vec<(Edge, Vec<usize>)>,
    /// Added edges with no walk behind them.
    pub added: Vec<Edge>,
    /// Edges of the subdivision or path that the composite colors itself.
    pub s_edges: Vec<Edge>,
    /// Edges of G missing from G' besides those at the specials and on S.
    pub removed: Vec<Edge>,
}

impl Reduction {
    /// Vertices of G' proper (everything but the specials).
    pub fn order(&self) -> usize {
        self.graph.n() - self.special.len()
    }

    /// Whether `e` exists in G' only because of an edit.
    pub fn is_added(&self, e: Edge) -> bool {
        self.added.contains(&e) || self.shortcuts.iter().any(|(s, _)| *s == e)
    }
}

/// Edges the composite part of a match colors on its own.
pub(crate) fn context_edges(m: &RuleMatch) -> Vec<Edge> {
    match &m.context {
        MatchContext::None => Vec::new(),
        MatchContext::Path(p) => p.windows(2).map(|w| edge(w[0], w[1])).collect(),
        MatchContext::Subdivision { s, .. } => s.edges(),
    }
}

/// Builds G' = G - U - E(S) with the given edits. Edits that add edges are
/// followed by a planarity check.
pub fn apply_rule_with(g: &Graph, m: &RuleMatch, edits: &[Edit]) -> Result<Reduction, RuleError> {
    let bad = |why: String| RuleError::BadEdit {
        rule: m.rule_id.clone(),
        reason: why,
    };
    let is_special = |v: usize| m.special.contains(&v);
    let s_edges = context_edges(m);
    let mut remove: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| is_special(a) || is_special(b))
        .collect();
    remove.extend(s_edges.iter().copied());
    let mut removed = Vec::new();
    let mut shortcuts = Vec::new();
    let mut added = Vec::new();
    let mut used_via: Vec<usize> = Vec::new();
    for e in edits {
        match e {
            Edit::Remove(a, b) => {
                if !g.has_edge(*a, *b) {
                    return Err(bad(format!("{a}{b} is not an edge")));
                }
                removed.push(edge(*a, *b));
            }
            Edit::Shortcut { a, b, via } => {
                if via.iter().any(|&x| !is_special(x) || used_via.contains(&x)) {
                    return Err(bad(format!("shortcut {a}{b} through {via:?} reuses or leaves the specials")));
                }
                let mut walk = vec![*a];
                walk.extend(via);
                walk.push(*b);
                if walk.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                    return Err(bad(format!("walk {walk:?} is not in G")));
                }
                used_via.extend(via);
                shortcuts.push((edge(*a, *b), walk));
            }
            Edit::Add(a, b) => added.push(edge(*a, *b)),
        }
    }
    remove.extend(removed.iter().copied());
    remove.sort_unstable();
    remove.dedup();
    let new: Vec<Edge> = shortcuts.iter().map(|(e, _)| *e).chain(added.iter().copied()).collect();
    for (i, &(a, b)) in new.iter().enumerate() {
        let kept = g.has_edge(a, b) && remove.binary_search(&(a, b)).is_err();
        if a == b || is_special(a) || is_special(b) || kept || new[..i].contains(&(a, b)) {
            return Err(bad(format!("cannot add {a}{b}")));
        }
    }
    let graph = g.edited(&new, &remove);
    if !new.is_empty() && !is_planar(&graph) {
        return Err(RuleError::PlanarityLost {
            rule: m.rule_id.clone(),
        });
    }
    Ok(Reduction {
        graph,
        special: m.special.clone(),
        shortcuts,
        added,
        s_edges,
        removed,
    })
}

/// [`apply_rule_with`] using the match's own edits, optional ones included.
pub fn apply_rule(g: &Graph, m: &RuleMatch) -> Result<Reduction, RuleError> {
    let mut edits = m.edits.clone();
    edits.extend(m.optional_edits.iter().cloned());
    apply_rule_with(g, m, &edits)
}
