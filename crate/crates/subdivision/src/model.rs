use std::collections::BTreeMap;

use graph_core::{edge, Edge, Graph};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    K4,
    C4Plus,
    SemiC4Plus,
}

/// The vertex where two parallel paths of a semi-C4+ meet, and the indices
/// of those two paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Contact {
    pub vertex: usize,
    pub paths: (usize, usize),
}

/// Six paths between four roots. Each path is a vertex sequence from one
/// root to another; roots never appear inside a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub kind: Kind,
    pub roots: [usize; 4],
    pub paths: Vec<Vec<usize>>,
    /// Set when a C4+ is claimed to satisfy the three star conditions.
    pub star: bool,
    pub contact: Option<Contact>,
}

impl Subdivision {
    pub fn new(kind: Kind, roots: [usize; 4], paths: Vec<Vec<usize>>) -> Self {
        Subdivision {
            kind,
            roots,
            paths,
            star: false,
            contact: None,
        }
    }

    pub fn ends(&self, i: usize) -> (usize, usize) {
        let p = &self.paths[i];
        (p[0], p[p.len() - 1])
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.roots.contains(&v)
    }

    pub fn incident(&self, i: usize, u: usize) -> bool {
        let (a, b) = self.ends(i);
        a == u || b == u
    }

    /// Indices of the paths joining roots `a` and `b`.
    pub fn paths_between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&i| {
                let (x, y) = self.ends(i);
                (x == a && y == b) || (x == b && y == a)
            })
            .collect()
    }

    /// Number of paths joining two roots: 0, 1 or 2.
    pub fn link(&self, a: usize, b: usize) -> usize {
        self.paths_between(a, b).len()
    }

    /// `link` for all six root pairs, keyed by (smaller, larger).
    pub fn links(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = (self.roots[i], self.roots[j]);
                out.insert((a.min(b), a.max(b)), self.link(a, b));
            }
        }
        out
    }

    /// Path `i` read from root `from`.
    pub fn oriented(&self, i: usize, from: usize) -> Vec<usize> {
        let mut p = self.paths[i].clone();
        if p[0] != from {
            p.reverse();
        }
        p
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| edge(w[0], w[1])))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.paths.iter().any(|p| {
            p.windows(2)
                .any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
        })
    }

    /// Membership in V(S), indexed by vertex.
    pub fn on_s(&self, n: usize) -> Vec<bool> {
        let mut on = vec![false; n];
        for p in &self.paths {
            for &v in p {
                on[v] = true;
            }
        }
        on
    }

    /// Index of the path holding `v` as an internal vertex. With a contact
    /// vertex the first of the two paths is reported.
    pub fn path_through(&self, v: usize) -> Option<usize> {
        self.paths
            .iter()
            .position(|p| p.len() > 2 && p[1..p.len() - 1].contains(&v))
    }

    /// Neighbors of `u` reached through edges outside E(S).
    pub fn remaining_neighbors(&self, g: &Graph, u: usize) -> Vec<usize> {
        g.neighbors(u)
            .iter()
            .copied()
            .filter(|&w| !self.has_edge(u, w))
            .collect()
    }

    pub fn length(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }
}
