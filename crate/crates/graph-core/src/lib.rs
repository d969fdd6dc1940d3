//! Graph representation shared by the whole workspace: a simple undirected
//! graph on dense ids, edge-list and graph6 I/O, a planarity test,
//! connectivity helpers and brute-force enumeration of small vertex cuts.

mod cuts;
pub mod families;
mod graph;
mod io;
mod planar;

pub use cuts::{connectivity_at_most, enumerate_cuts, for_each_subset, separation_witness, VertexCut};
pub use graph::{edge, Edge, Graph};
pub use io::{parse_edge_list, parse_graph, parse_graph6, to_dot, to_edge_list, to_graph6};
pub use planar::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range for n={1}")]
    VertexOutOfRange(usize, usize),
}

/// The two connected planar graphs that need one path more than ⌊n/2⌋.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exception {
    K3,
    K5Minus,
    Other,
}

/// Recognizes K3 and K5 minus an edge. On a simple graph the vertex and edge
/// counts alone pin both down.
pub fn classify_exception(g: &Graph) -> Exception {
    match (g.n(), g.m()) {
        (3, 3) => Exception::K3,
        (5, 9) => Exception::K5Minus,
        _ => Exception::Other,
    }
}
