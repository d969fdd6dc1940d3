//! Ground truth for path decompositions.
//!
//! [`min_path_decomposition`] computes the exact minimum number of paths by
//! iterative deepening over a branch and bound search; [`gallai_check`]
//! compares it with ⌊n/2⌋. The crate also enumerates labeled connected planar
//! graphs and generates random planar ones.

mod enumerate;
mod generate;
mod greedy;
mod search;

pub use enumerate::{enumerate_connected_planar, ConnectedPlanar};
pub use generate::{random_min_degree5_planar, random_planar_graph, random_triangulation};
pub use greedy::greedy_paths;

use decomp_model::EdgeColoring;
use graph_core::{classify_exception, Exception, Graph};
use search::{Outcome, Search};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub min_paths: usize,
    pub witness: EdgeColoring,
    pub nodes_explored: u64,
    pub timed_out: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    /// The budget ran out. `best` holds the best decomposition known and
    /// `lower_bound` the smallest count not yet ruled out.
    #[error("node budget exhausted (best known {}, lower bound {lower_bound})", best.min_paths)]
    Timeout {
        best: Box<OracleResult>,
        lower_bound: usize,
    },
}

/// Lower bound from parity (each path has two ends), length (a path has at
/// most `n - 1` edges) and degree (a path uses at most two edges at a vertex).
pub fn lower_bound(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let parity = g.odd_vertices().div_ceil(2);
    let length = g.m().div_ceil(g.n() - 1);
    let degree = g.max_degree().div_ceil(2);
    parity.max(length).max(degree)
}

/// Result of a bounded feasibility search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Within {
    Found(EdgeColoring),
    Impossible,
    Timeout,
}

/// Searches for a decomposition into at most `k` paths.
pub fn decompose_within(g: &Graph, k: usize, budget: u64) -> (Within, u64) {
    if g.m() == 0 {
        return (Within::Found(EdgeColoring::for_graph(g, Vec::new())), 0);
    }
    let greedy = greedy_paths(g);
    if greedy.num_colors() <= k {
        return (Within::Found(greedy), 0);
    }
    if k < lower_bound(g) {
        return (Within::Impossible, 0);
    }
    if g.n() > search::MAX_N {
        return (Within::Timeout, 0);
    }
    let mut s = Search::new(g, k, budget);
    let out = match s.run() {
        Outcome::Found(colors) => Within::Found(EdgeColoring::for_graph(g, colors)),
        Outcome::Infeasible => Within::Impossible,
        Outcome::Timeout => Within::Timeout,
    };
    (out, s.nodes)
}

/// Exact minimum path decomposition.
pub fn min_path_decomposition(g: &Graph, budget: u64) -> Result<OracleResult, OracleError> {
    let greedy = greedy_paths(g);
    let ub = greedy.num_colors();
    let mut nodes = 0u64;
    for k in lower_bound(g)..ub {
        if g.n() > search::MAX_N {
            return Err(OracleError::Timeout {
                best: Box::new(OracleResult {
                    min_paths: ub,
                    witness: greedy,
                    nodes_explored: 0,
                    timed_out: true,
                }),
                lower_bound: k,
            });
        }
        let mut s = Search::new(g, k, budget.saturating_sub(nodes));
        let out = s.run();
        nodes += s.nodes;
        match out {
            Outcome::Found(colors) => {
                return Ok(OracleResult {
                    min_paths: k,
                    witness: EdgeColoring::for_graph(g, colors),
                    nodes_explored: nodes,
                    timed_out: false,
                })
            }
            Outcome::Infeasible => {}
            Outcome::Timeout => {
                return Err(OracleError::Timeout {
                    best: Box::new(OracleResult {
                        min_paths: ub,
                        witness: greedy,
                        nodes_explored: nodes,
                        timed_out: true,
                    }),
                    lower_bound: k,
                })
            }
        }
    }
    Ok(OracleResult {
        min_paths: ub,
        witness: greedy,
        nodes_explored: nodes,
        timed_out: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GallaiVerdict {
    HoldsStrict,
    HoldsRelaxed,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiCheck {
    pub verdict: GallaiVerdict,
    pub min_paths: usize,
    pub witness: EdgeColoring,
}

/// Compares the exact minimum with ⌊n/2⌋, allowing ⌈n/2⌉ only for K3 and
/// K5 minus an edge.
pub fn gallai_check(g: &Graph, budget: u64) -> Result<GallaiCheck, OracleError> {
    let r = min_path_decomposition(g, budget)?;
    let n = g.n();
    let verdict = if r.min_paths <= n / 2 {
        GallaiVerdict::HoldsStrict
    } else if r.min_paths == n.div_ceil(2) && classify_exception(g) != Exception::Other {
        GallaiVerdict::HoldsRelaxed
    } else {
        GallaiVerdict::Violated
    };
    Ok(GallaiCheck {
        verdict,
        min_paths: r.min_paths,
        witness: r.witness,
    })
}
