use std::collections::BTreeSet;

use graph_core::{edge, Edge};

use crate::shape::{classify_class, ShapeKind};
use crate::ModelError;

/// The obstruction to merging a cycle and a path into two paths: a 5-cycle
/// whose vertices all lie on the path, with the union inducing K5 minus an
/// edge on those five vertices.
pub fn is_exceptional(cycle_edges: &[Edge], path_edges: &[Edge]) -> Result<bool, ModelError> {
    let cs = classify_class(cycle_edges);
    let ps = classify_class(path_edges);
    if cs.kind != ShapeKind::Cycle || ps.kind != ShapeKind::Path {
        return Err(ModelError::ShapeError(
            "expected a cycle and a path".to_string(),
        ));
    }
    if cs.len() != 5 {
        return Ok(false);
    }
    let cv: BTreeSet<usize> = cs.vertex_sequence.iter().copied().collect();
    let pv: BTreeSet<usize> = ps.vertex_sequence.iter().copied().collect();
    if !cv.is_subset(&pv) {
        return Ok(false);
    }
    let union: BTreeSet<Edge> = cycle_edges
        .iter()
        .chain(path_edges)
        .map(|&(a, b)| edge(a, b))
        .collect();
    let inside = union
        .iter()
        .filter(|(a, b)| cv.contains(a) && cv.contains(b))
        .count();
    Ok(inside == 9)
}
