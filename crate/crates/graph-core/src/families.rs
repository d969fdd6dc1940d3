//! Small named graphs used as fixtures throughout the workspace.

use crate::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_edges_dedup(n, edges)
}

/// K5 with the edge {0,4} removed.
pub fn k5_minus() -> Graph {
    complete(5).edited(&[], &[(0, 4)])
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges_dedup(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
    Graph::from_edges_dedup(a + b, edges)
}

/// Wheel with hub 0 and rim 1..=k.
pub fn wheel(k: usize) -> Graph {
    let rim = (0..k).map(|i| (1 + i, 1 + (i + 1) % k));
    Graph::from_edges_dedup(k + 1, rim.chain((1..=k).map(|i| (0, i))))
}

/// K_{2,2,2}; the non-adjacent pairs are {0,1}, {2,3}, {4,5}.
pub fn octahedron() -> Graph {
    complete(6).edited(&[], &[(0, 1), (2, 3), (4, 5)])
}

/// The 5-regular icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10,
/// apex 11.
pub fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        e.extend([(0, up), (up, up_next), (up, low), (up, low_next)]);
        e.extend([(low, low_next), (low, 11)]);
    }
    Graph::from_edges_dedup(12, e)
}
