use graph_core::{edge, Graph};
use serde::Serialize;

/// A 2-contraction: the subgraph of `g` induced by `vertices`, plus the edge
/// between the two damaged vertices. When that edge is missing from `g` it
/// is realized by `bridge_path`, which runs outside `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub vertices: Vec<usize>,
    pub damaged: (usize, usize),
    pub bridge_path: Vec<usize>,
}

impl Contraction {
    /// The contraction as a graph on local ids, with the map back to `g`.
    pub fn graph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        let (h, map) = g.induced(&self.vertices);
        let local = |v: usize| self.vertices.binary_search(&v).unwrap();
        let (a, b) = self.damaged;
        (h.edited(&[edge(local(a), local(b))], &[]), map)
    }

    pub fn is_damaged(&self, v: usize) -> bool {
        v == self.damaged.0 || v == self.damaged.1
    }
}

/// Starting vertex for the descent: the only vertex of degree at most 4 if
/// there is exactly one, vertex 0 otherwise.
pub fn start_vertex(g: &Graph) -> usize {
    let low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) <= 4).collect();
    if low.len() == 1 {
        low[0]
    } else {
        0
    }
}

/// Shrinks `g` with damaged edge (u1, u2) through cut-vertices and 2-cuts
/// until no cut of size at most 2 leaves a part free of damaged vertices.
/// Cuts are taken in lexicographic order, and among the clean parts the one
/// with the smallest member is kept.
pub fn minimal_2_contraction(g: &Graph) -> Contraction {
    assert!(g.n() >= 3 && g.is_connected());
    let u1 = start_vertex(g);
    let u2 = g.neighbors(u1)[0];
    let mut cur = Contraction {
        vertices: (0..g.n()).collect(),
        damaged: (u1.min(u2), u1.max(u2)),
        bridge_path: vec![u1.min(u2), u1.max(u2)],
    };
    loop {
        let (h, map) = cur.graph(g);
        match descend(g, &cur, &h, &map) {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

fn descend(g: &Graph, cur: &Contraction, h: &Graph, map: &[usize]) -> Option<Contraction> {
    for size in 1..=2 {
        let mut found = None;
        graph_core::for_each_subset(h.n(), size, |set| {
            if set.len() < size {
                return true;
            }
            let comps = h.components_avoiding(set);
            if comps.len() < 2 {
                return true;
            }
            let clean = comps
                .iter()
                .find(|c| c.len() + size >= 3 && c.iter().all(|&v| !cur.is_damaged(map[v])));
            if let Some(c) = clean {
                found = Some((set.to_vec(), c.clone()));
                return false;
            }
            true
        });
        let Some((cut, part)) = found else { continue };
        let part: Vec<usize> = part.iter().map(|&v| map[v]).collect();
        let cut: Vec<usize> = cut.iter().map(|&v| map[v]).collect();
        let mut vertices: Vec<usize> = part.iter().chain(&cut).copied().collect();
        vertices.sort_unstable();
        let (x, y, bridge) = if size == 1 {
            let x = cut[0];
            let y = *g
                .neighbors(x)
                .iter()
                .find(|w| part.binary_search(w).is_ok())
                .expect("a cut-vertex touches every part");
            (x, y, vec![x, y])
        } else {
            let (x1, x2) = (cut[0], cut[1]);
            let mut blocked = vec![false; g.n()];
            for &v in &part {
                blocked[v] = true;
            }
            let path = g
                .shortest_path_avoiding(x1, x2, &blocked)
                .expect("a 2-cut of a 2-connected contraction is bridged outside the part");
            (x1, x2, path)
        };
        let (a, b) = (x.min(y), x.max(y));
        let bridge_path = if bridge[0] == a {
            bridge
        } else {
            bridge.into_iter().rev().collect()
        };
        return Some(Contraction {
            vertices,
            damaged: (a, b),
            bridge_path,
        });
    }
    None
}

/// `Σ (d(x) - 6)` over the vertices of `h`, at most -12 on a planar graph
/// with at least three vertices.
pub fn euler_excess(h: &Graph) -> i64 {
    (0..h.n()).map(|v| h.degree(v) as i64 - 6).sum()
}
