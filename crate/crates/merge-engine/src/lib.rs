//! Turning one cycle and one path into two paths on the same edges, and
//! using that repeatedly to remove every cycle class from a coloring.

use std::collections::{BTreeMap, BTreeSet};

use decomp_model::{classify_class, EdgeColoring, ShapeKind};
use graph_core::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergeOutcome {
    TwoPaths(Vec<Edge>, Vec<Edge>),
    Exceptional,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MergeError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no companion path for the cycle of color {color}")]
    NoCompanionPath { color: usize, cycle: Vec<usize> },
}

/// Splits `C ∪ P` into two paths by exhaustive search over 2-colorings.
///
/// Returns [`MergeOutcome::Exceptional`] when no split exists, which for
/// inputs meeting the precondition happens exactly on the exceptional graph.
pub fn merge_cycle_path(
    g: &Graph,
    cycle: &[Edge],
    path: &[Edge],
) -> Result<MergeOutcome, MergeError> {
    let cs = classify_class(cycle);
    let ps = classify_class(path);
    if cs.kind != ShapeKind::Cycle || ps.kind != ShapeKind::Path {
        return Err(MergeError::PreconditionViolated(
            "expected a cycle and a path".into(),
        ));
    }
    if cycle
        .iter()
        .chain(path)
        .any(|&(a, b)| !g.has_edge(a, b))
    {
        return Err(MergeError::PreconditionViolated(
            "edge not in the graph".into(),
        ));
    }
    let cv: BTreeSet<usize> = cs.vertex_sequence.iter().copied().collect();
    let shared = ps
        .vertex_sequence
        .iter()
        .filter(|v| cv.contains(v))
        .count();
    if !(1..=5).contains(&shared) {
        return Err(MergeError::PreconditionViolated(format!(
            "{shared} shared vertices"
        )));
    }
    Ok(split_two(cycle, path))
}

/// The search itself, without the shared-vertex precondition.
fn split_two(cycle: &[Edge], path: &[Edge]) -> MergeOutcome {
    let edges: Vec<Edge> = cycle
        .iter()
        .chain(path)
        .map(|&(a, b)| graph_core::edge(a, b))
        .collect();
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in &edges {
        let next = ids.len();
        ids.entry(a).or_insert(next);
        let next = ids.len();
        ids.entry(b).or_insert(next);
    }
    let local: Vec<(usize, usize)> = edges.iter().map(|(a, b)| (ids[a], ids[b])).collect();
    let mut st = Split::new(ids.len(), &local);
    if st.dfs(0) {
        let (mut p1, mut p2) = (Vec::new(), Vec::new());
        for (i, &e) in edges.iter().enumerate() {
            if st.side[i] == 0 {
                p1.push(e);
            } else {
                p2.push(e);
            }
        }
        p1.sort_unstable();
        p2.sort_unstable();
        MergeOutcome::TwoPaths(p1, p2)
    } else {
        MergeOutcome::Exceptional
    }
}

/// Two linear forests grown edge by edge; each must end as one path.
struct Split<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    deg: Vec<u8>,
    partner: Vec<usize>,
    pieces: [usize; 2],
    rem: Vec<usize>,
    side: Vec<u8>,
}

impl<'a> Split<'a> {
    fn new(n: usize, edges: &'a [(usize, usize)]) -> Self {
        let mut rem = vec![0; n];
        for &(a, b) in edges {
            rem[a] += 1;
            rem[b] += 1;
        }
        Split {
            n,
            edges,
            deg: vec![0; 2 * n],
            partner: vec![usize::MAX; 2 * n],
            pieces: [0, 0],
            rem,
            side: vec![0; edges.len()],
        }
    }

    fn dfs(&mut self, i: usize) -> bool {
        if i == self.edges.len() {
            return self.pieces == [1, 1];
        }
        let (a, b) = self.edges[i];
        // The first edge goes to class 0: the two classes are interchangeable.
        let sides: &[usize] = if i == 0 { &[0] } else { &[0, 1] };
        for &c in sides {
            let saved = (self.partner.clone(), self.pieces);
            if !self.add(c, a, b) {
                continue;
            }
            self.side[i] = c as u8;
            if self.alive(a, b) && self.dfs(i + 1) {
                return true;
            }
            self.partner = saved.0;
            self.pieces = saved.1;
            self.deg[c * self.n + a] -= 1;
            self.deg[c * self.n + b] -= 1;
            self.rem[a] += 1;
            self.rem[b] += 1;
        }
        false
    }

    fn add(&mut self, c: usize, a: usize, b: usize) -> bool {
        let (ia, ib) = (c * self.n + a, c * self.n + b);
        let (da, db) = (self.deg[ia], self.deg[ib]);
        if da == 2 || db == 2 || (da == 1 && db == 1 && self.partner[ia] == b) {
            return false;
        }
        match (da, db) {
            (0, 0) => {
                self.partner[ia] = b;
                self.partner[ib] = a;
                self.pieces[c] += 1;
            }
            (1, 0) => {
                let x = self.partner[ia];
                self.partner[c * self.n + x] = b;
                self.partner[ib] = x;
            }
            (0, 1) => {
                let y = self.partner[ib];
                self.partner[c * self.n + y] = a;
                self.partner[ia] = y;
            }
            _ => {
                let (x, y) = (self.partner[ia], self.partner[ib]);
                self.partner[c * self.n + x] = y;
                self.partner[c * self.n + y] = x;
                self.pieces[c] -= 1;
            }
        }
        self.deg[ia] += 1;
        self.deg[ib] += 1;
        self.rem[a] -= 1;
        self.rem[b] -= 1;
        true
    }

    /// A class with several pieces must not contain a piece that can no
    /// longer grow at either end.
    fn alive(&self, a: usize, b: usize) -> bool {
        for v in [a, b] {
            if self.rem[v] != 0 {
                continue;
            }
            for c in 0..2 {
                let i = c * self.n + v;
                if self.deg[i] == 1 && self.pieces[c] >= 2 && self.rem[self.partner[i]] == 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Removes every cycle class of `c` by merging it with a path class.
///
/// Cycles are handled in color order. For each, companion paths are tried in
/// color order: first those sharing 1 to 5 vertices with the cycle, then any
/// other path touching it. Colors listed in `protected` are never used as
/// companions. The color count and the edge set are preserved.
pub fn eliminate_cycles(
    g: &Graph,
    c: &EdgeColoring,
    protected: &[usize],
) -> Result<EdgeColoring, MergeError> {
    let mut classes = c.classes();
    let shapes: Vec<_> = classes.iter().map(|cl| classify_class(cl)).collect();
    let cycles: Vec<usize> = (0..classes.len())
        .filter(|&i| shapes[i].kind == ShapeKind::Cycle)
        .collect();
    if let Some(i) = (0..classes.len()).find(|&i| shapes[i].kind == ShapeKind::Invalid) {
        return Err(MergeError::PreconditionViolated(format!(
            "color {i} is neither a path nor a cycle"
        )));
    }
    let vsets: Vec<BTreeSet<usize>> = cycles
        .iter()
        .map(|&i| shapes[i].vertex_sequence.iter().copied().collect())
        .collect();
    for x in 0..vsets.len() {
        for y in x + 1..vsets.len() {
            if !vsets[x].is_disjoint(&vsets[y]) {
                return Err(MergeError::PreconditionViolated(
                    "cycle classes are not vertex-disjoint".into(),
                ));
            }
        }
    }
    for (&ci, cv) in cycles.iter().zip(&vsets) {
        let mut candidates: Vec<(bool, usize)> = Vec::new();
        for (pi, class) in classes.iter().enumerate() {
            if pi == ci || protected.contains(&pi) {
                continue;
            }
            let ps = classify_class(class);
            if ps.kind != ShapeKind::Path {
                continue;
            }
            let shared = ps.vertex_sequence.iter().filter(|v| cv.contains(v)).count();
            if shared > 0 {
                candidates.push((shared > 5, pi));
            }
        }
        candidates.sort_unstable();
        let mut merged = false;
        for (_, pi) in candidates {
            if let MergeOutcome::TwoPaths(p1, p2) = split_two(&classes[ci], &classes[pi]) {
                classes[ci] = p1;
                classes[pi] = p2;
                merged = true;
                break;
            }
        }
        if !merged {
            return Err(MergeError::NoCompanionPath {
                color: ci,
                cycle: shapes[ci].vertex_sequence.clone(),
            });
        }
    }
    let out = EdgeColoring::from_classes(classes).expect("same edges, same classes");
    debug_assert!(out.covers(g) || !c.covers(g));
    Ok(out)
}
