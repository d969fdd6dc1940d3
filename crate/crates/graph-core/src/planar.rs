use rustworkx_core::petgraph::graph::UnGraph;

use crate::Graph;

/// Planarity test (left-right criterion, via `rustworkx-core`).
///
/// Two cheap filters run first: at most 8 edges cannot contain a Kuratowski
/// subdivision, and more than `3n - 6` edges rule planarity out.
pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.n(), g.m());
    if m <= 8 {
        return true;
    }
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    let pg: UnGraph<(), ()> = UnGraph::from_edges(
        g.edges().iter().map(|&(a, b)| (a as u32, b as u32)),
    );
    rustworkx_core::planar::is_planar(&pg)
}
