use std::collections::BTreeMap;

use graph_core::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Path,
    Cycle,
    Invalid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    Empty,
    Branching(usize),
    Disconnected,
    RepeatedEdge,
}

/// Shape of one color class.
///
/// For a path the traversal starts at the smaller endpoint; for a cycle it
/// starts at the smallest vertex, heads to its smaller neighbor, and repeats
/// the start vertex at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassShape {
    pub kind: ShapeKind,
    pub endpoints: Option<(usize, usize)>,
    pub vertex_sequence: Vec<usize>,
    pub invalid: Option<InvalidReason>,
}

impl ColorClassShape {
    fn invalid(reason: InvalidReason) -> Self {
        ColorClassShape {
            kind: ShapeKind::Invalid,
            endpoints: None,
            vertex_sequence: Vec::new(),
            invalid: Some(reason),
        }
    }

    pub fn is_path(&self) -> bool {
        self.kind == ShapeKind::Path
    }

    /// Number of edges of a path or cycle.
    pub fn len(&self) -> usize {
        self.vertex_sequence.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Classifies an edge set as a path, a cycle, or neither. The answer does not
/// depend on the order of `edges`.
pub fn classify_class(edges: &[Edge]) -> ColorClassShape {
    if edges.is_empty() {
        return ColorClassShape::invalid(InvalidReason::Empty);
    }
    let mut sorted: Vec<Edge> = edges
        .iter()
        .map(|&(a, b)| graph_core::edge(a, b))
        .collect();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return ColorClassShape::invalid(InvalidReason::RepeatedEdge);
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in &sorted {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if let Some((&v, _)) = adj.iter().find(|(_, l)| l.len() > 2) {
        return ColorClassShape::invalid(InvalidReason::Branching(v));
    }
    let ends: Vec<usize> = adj
        .iter()
        .filter(|(_, l)| l.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    let start = match ends.first() {
        Some(&v) => v,
        None => *adj.keys().next().unwrap(),
    };
    // Walk from `start`, always preferring the smaller unused neighbor first.
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let mut next: Vec<usize> = adj[&cur].iter().copied().filter(|&w| w != prev).collect();
        next.sort_unstable();
        let Some(&w) = next.first() else { break };
        if seq.len() > 1 && w == start {
            seq.push(w);
            break;
        }
        seq.push(w);
        prev = cur;
        cur = w;
        if seq.len() > sorted.len() + 1 {
            break;
        }
    }
    if seq.len() != sorted.len() + 1 {
        return ColorClassShape::invalid(InvalidReason::Disconnected);
    }
    if ends.is_empty() {
        ColorClassShape {
            kind: ShapeKind::Cycle,
            endpoints: None,
            vertex_sequence: seq,
            invalid: None,
        }
    } else {
        ColorClassShape {
            kind: ShapeKind::Path,
            endpoints: Some((ends[0], ends[1])),
            vertex_sequence: seq,
            invalid: None,
        }
    }
}
