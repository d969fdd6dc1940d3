//! Seeded random planar graphs for fuzzing.

use std::collections::HashMap;

use graph_core::{edge, is_planar, Edge, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random connected planar graph: a random spanning tree, then random
/// non-edges are tried in a shuffled order and kept when the graph stays
/// planar, until `target_m` edges or the attempt cap is reached.
pub fn random_planar_graph(n: usize, target_m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 1 {
        return Graph::empty(n);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges: Vec<Edge> = (1..n)
        .map(|i| edge(perm[i], perm[rng.gen_range(0..i)]))
        .collect();
    let mut g = Graph::from_edges_dedup(n, edges.iter().copied());
    let mut pool: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    pool.shuffle(&mut rng);
    let cap = 2 * target_m + 50;
    for (attempts, e) in pool.into_iter().enumerate() {
        if edges.len() >= target_m || attempts >= cap {
            break;
        }
        edges.push(e);
        let candidate = Graph::from_edges_dedup(n, edges.iter().copied());
        if is_planar(&candidate) {
            g = candidate;
        } else {
            edges.pop();
        }
    }
    g
}

/// Triangulation with explicit faces, supporting edge flips.
struct Triangulation {
    adj: Vec<Vec<usize>>,
    faces: Vec<[usize; 3]>,
    edge_faces: HashMap<Edge, [usize; 2]>,
}

impl Triangulation {
    /// Stacked triangulation: K4, then each new vertex goes into a random face.
    fn stacked(n: usize, rng: &mut ChaCha8Rng) -> Self {
        assert!(n >= 4);
        let mut t = Triangulation {
            adj: vec![Vec::new(); n],
            faces: Vec::new(),
            edge_faces: HashMap::new(),
        };
        let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        for v in 4..n {
            let i = rng.gen_range(0..faces.len());
            let [a, b, c] = faces[i];
            faces[i] = [a, b, v];
            faces.push([b, c, v]);
            faces.push([a, c, v]);
        }
        for f in faces {
            t.add_face(f);
        }
        t
    }

    fn add_face(&mut self, f: [usize; 3]) {
        let idx = self.faces.len();
        self.faces.push(f);
        for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
            let e = edge(a, b);
            match self.edge_faces.get_mut(&e) {
                Some(slot) => slot[1] = idx,
                None => {
                    self.edge_faces.insert(e, [idx, usize::MAX]);
                    self.adj[a].push(b);
                    self.adj[b].push(a);
                }
            }
        }
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_faces.contains_key(&edge(a, b))
    }

    fn apex(&self, face: usize, e: Edge) -> usize {
        *self.faces[face]
            .iter()
            .find(|&&x| x != e.0 && x != e.1)
            .unwrap()
    }

    /// The two vertices opposite to `e`, if `e` can be flipped.
    fn flip_target(&self, e: Edge) -> Option<(usize, usize)> {
        let [f1, f2] = *self.edge_faces.get(&e)?;
        let (x, y) = (self.apex(f1, e), self.apex(f2, e));
        let ok = x != y
            && !self.has_edge(x, y)
            && self.adj[e.0].len() > 3
            && self.adj[e.1].len() > 3;
        ok.then_some((x, y))
    }

    fn flip(&mut self, e: Edge) {
        let (u, v) = e;
        let [f1, f2] = self.edge_faces[&e];
        let (x, y) = (self.apex(f1, e), self.apex(f2, e));
        self.faces[f1] = [x, y, u];
        self.faces[f2] = [x, y, v];
        self.edge_faces.remove(&e);
        self.edge_faces.insert(edge(x, y), [f1, f2]);
        for (w, from, to) in [(y, f2, f1), (x, f1, f2)] {
            let moving = if from == f2 { edge(u, w) } else { edge(v, w) };
            let slot = self.edge_faces.get_mut(&moving).unwrap();
            for s in slot.iter_mut() {
                if *s == from {
                    *s = to;
                }
            }
        }
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        self.adj[x].push(y);
        self.adj[y].push(x);
    }

    fn graph(&self) -> Graph {
        Graph::from_edges_dedup(self.adj.len(), self.edge_faces.keys().copied())
    }

    fn sorted_edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.edge_faces.keys().copied().collect();
        e.sort_unstable();
        e
    }
}

/// Random triangulation on `n >= 4` vertices: stacked, then scrambled by
/// `4n` random flips.
pub fn random_triangulation(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Triangulation::stacked(n, &mut rng);
    for _ in 0..4 * n {
        let edges = t.sorted_edges();
        let e = edges[rng.gen_range(0..edges.len())];
        if t.flip_target(e).is_some() {
            t.flip(e);
        }
    }
    t.graph()
}

/// Planar graph in which at most one vertex has degree below 5, so that no
/// two vertices of degree at most 4 exist. Built from a random triangulation
/// by flips that lower the total degree deficit, then optionally thinned by
/// deleting up to `deletions` edges whose endpoints both keep degree >= 5.
/// Returns `None` when the local search gets stuck (rare for n >= 14).
pub fn random_min_degree5_planar(n: usize, deletions: usize, seed: u64) -> Option<Graph> {
    if n < 12 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Triangulation::stacked(n, &mut rng);
    let deficit = |t: &Triangulation, v: usize| 5usize.saturating_sub(t.adj[v].len());
    for _ in 0..400 * n {
        let low: Vec<usize> = (0..n).filter(|&v| t.adj[v].len() < 5).collect();
        if low.len() <= 1 {
            break;
        }
        let w = low[rng.gen_range(0..low.len())];
        let faces: Vec<usize> = t
            .faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&w))
            .map(|(i, _)| i)
            .collect();
        let f = faces[rng.gen_range(0..faces.len())];
        let opp: Vec<usize> = t.faces[f].iter().copied().filter(|&x| x != w).collect();
        let e = edge(opp[0], opp[1]);
        let Some((x, y)) = t.flip_target(e) else { continue };
        let before: usize = [e.0, e.1, x, y].iter().map(|&v| deficit(&t, v)).sum();
        let after: usize = [(e.0, -1i64), (e.1, -1), (x, 1), (y, 1)]
            .iter()
            .map(|&(v, d)| 5usize.saturating_sub((t.adj[v].len() as i64 + d) as usize))
            .sum();
        if after < before || (after == before && rng.gen_bool(0.3)) {
            t.flip(e);
        }
    }
    let g = t.graph();
    if (0..n).filter(|&v| g.degree(v) < 5).count() > 1 {
        return None;
    }
    let mut removed = Vec::new();
    let mut edges = g.edges().to_vec();
    edges.shuffle(&mut rng);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for (a, b) in edges {
        if removed.len() >= deletions {
            break;
        }
        if deg[a] > 5 && deg[b] > 5 {
            deg[a] -= 1;
            deg[b] -= 1;
            removed.push((a, b));
        }
    }
    let h = g.edited(&[], &removed);
    h.is_connected().then_some(h)
}
