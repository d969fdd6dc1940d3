//! Lifting a coloring of G' to G: explicit programs, the synthesized search
//! and the final cycle removal.

use std::collections::VecDeque;

use decomp_model::{classify_class, verify_path_coloring, EdgeColoring, ShapeKind};
use graph_core::{edge, Edge, Graph};
use merge_engine::eliminate_cycles;

use crate::program::{run_program, Primitive};
use crate::reduce::Reduction;
use crate::search::{solve, Outcome, Problem, Unit};
use crate::RuleError;

#[derive(Clone, Copy, Debug)]
pub(crate) struct LiftSettings {
    /// 0 keeps every color of G'; 1 frees edges of G' between neighbors of
    /// the specials; 2 frees every edge of G' touching such a neighbor.
    pub release: usize,
    /// Shortcut edges are replaced by their walk in the same color instead
    /// of being left for the search to reconnect.
    pub forced: bool,
    pub node_budget: u64,
    pub max_accepts: usize,
}

pub(crate) struct Lifted {
    pub coloring: Option<EdgeColoring>,
    pub nodes: u64,
}

/// Turns a coloring of G whose classes are paths and cycles into one whose
/// classes are all paths, merging each cycle with a path it meets. The
/// color count does not change.
pub fn safety_recolor(g: &Graph, c: &EdgeColoring) -> Result<EdgeColoring, RuleError> {
    let has_cycle = c
        .classes()
        .iter()
        .any(|cl| classify_class(cl).kind == ShapeKind::Cycle);
    let out = if has_cycle {
        eliminate_cycles(g, c, &[]).map_err(|e| RuleError::RecoloringInvalid {
            rule: String::new(),
            reason: e.to_string(),
        })?
    } else {
        c.clone()
    };
    match verify_path_coloring(g, &out, false) {
        Ok(r) if r.ok => Ok(out),
        Ok(r) => Err(RuleError::RecoloringInvalid {
            rule: String::new(),
            reason: r.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        }),
        Err(e) => Err(RuleError::RecoloringInvalid {
            rule: String::new(),
            reason: e.to_string(),
        }),
    }
}

/// Runs an explicit recoloring program on `pc` and checks the result.
pub(crate) fn lift_program(
    g: &Graph,
    pc: &EdgeColoring,
    program: &[Primitive],
) -> Result<EdgeColoring, RuleError> {
    let c = run_program(pc, program).map_err(|reason| RuleError::RecoloringInvalid {
        rule: String::new(),
        reason,
    })?;
    if !c.covers(g) {
        return Err(RuleError::RecoloringInvalid {
            rule: String::new(),
            reason: "program output does not cover G".into(),
        });
    }
    safety_recolor(g, &c)
}

fn components(edges: &[Edge]) -> Vec<Vec<Edge>> {
    let mut out: Vec<Vec<Edge>> = Vec::new();
    let mut left: Vec<Edge> = edges.to_vec();
    while let Some(first) = left.pop() {
        let mut comp = vec![first];
        let mut frontier = vec![first.0, first.1];
        while let Some(v) = frontier.pop() {
            let mut i = 0;
            while i < left.len() {
                let (a, b) = left[i];
                if a == v || b == v {
                    comp.push(left.swap_remove(i));
                    frontier.push(if a == v { b } else { a });
                } else {
                    i += 1;
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Searches for a coloring of G extending `pc` with at most `budget` new
/// colors, the first of which are the fixed `s_classes`.
pub(crate) fn lift_search(
    g: &Graph,
    red: &Reduction,
    pc: &EdgeColoring,
    s_classes: &[Vec<Edge>],
    budget: usize,
    set: LiftSettings,
) -> Lifted {
    let k = pc.num_colors();
    let colors = k + budget;
    let mut near = vec![false; g.n()];
    for &u in &red.special {
        for &x in g.neighbors(u) {
            near[x] = !red.special.contains(&x);
        }
    }
    let released = |(a, b): Edge| match set.release {
        0 => false,
        1 => near[a] && near[b],
        _ => near[a] || near[b],
    };
    let mut fixed: Vec<(Edge, usize)> = Vec::new();
    let mut units: Vec<Unit> = Vec::new();
    let mut taken: Vec<Edge> = Vec::new();
    for (c, class) in pc.classes().into_iter().enumerate() {
        let mut kept = Vec::new();
        let mut lost = false;
        for e in class {
            if let Some((_, walk)) = red.shortcuts.iter().find(|(s, _)| *s == e) {
                if set.forced {
                    kept.extend(walk.windows(2).map(|w| edge(w[0], w[1])));
                }
            } else if red.added.contains(&e) {
                continue;
            } else if released(e) {
                lost = true;
            } else {
                kept.push(e);
            }
        }
        taken.extend(kept.iter().copied());
        let pieces = components(&kept);
        if lost && pieces.len() > 1 {
            units.extend(pieces.into_iter().map(|edges| Unit {
                edges,
                home: Some(c),
            }));
        } else {
            fixed.extend(kept.into_iter().map(|e| (e, c)));
        }
    }
    for (i, cl) in s_classes.iter().enumerate() {
        fixed.extend(cl.iter().map(|&e| (e, k + i)));
        taken.extend(cl.iter().copied());
    }
    taken.sort_unstable();
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue: VecDeque<usize> = red.special.iter().copied().collect();
    for &u in &red.special {
        dist[u] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for &x in g.neighbors(v) {
            if dist[x] == usize::MAX {
                dist[x] = dist[v] + 1;
                queue.push_back(x);
            }
        }
    }
    let mut free: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| taken.binary_search(e).is_err())
        .collect();
    free.sort_by_key(|&(a, b)| (dist[a].min(dist[b]), dist[a].max(dist[b]), (a, b)));
    units.extend(free.into_iter().map(|e| Unit {
        edges: vec![e],
        home: None,
    }));
    let problem = Problem {
        n: g.n(),
        colors,
        first_new: k,
        fixed,
        units,
        node_budget: set.node_budget,
        max_accepts: set.max_accepts,
    };
    let (outcome, nodes) = solve(&problem, |choice: &[usize]| {
        let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); colors];
        for &(e, c) in &problem.fixed {
            classes[c].push(e);
        }
        for (u, &c) in problem.units.iter().zip(choice) {
            classes[c].extend(u.edges.iter().copied());
        }
        let c = EdgeColoring::from_classes(classes).ok()?;
        safety_recolor(g, &c).ok()
    });
    Lifted {
        coloring: match outcome {
            Outcome::Found(c) => Some(c),
            Outcome::Exhausted | Outcome::OutOfBudget => None,
        },
        nodes,
    }
}
