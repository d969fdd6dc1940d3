//! The two recoloring moves used when lifting a coloring of a reduced graph:
//! rerouting one edge of a class through new vertices, and growing a class at
//! one of its ends.

use graph_core::{edge, Edge};

use crate::shape::{classify_class, ShapeKind};
use crate::{EdgeColoring, ModelError};

/// Replaces `removed_edge` (which must carry `color`) by the path `section`
/// between the same two ends. The result is not validated: if the section
/// revisits a vertex of the class, the class stops being a path and the
/// caller is expected to notice.
pub fn apply_deviation(
    c: &EdgeColoring,
    color: usize,
    removed_edge: Edge,
    section: &[usize],
) -> Result<EdgeColoring, ModelError> {
    let (a, b) = removed_edge;
    if c.color_of(a, b) != Some(color) {
        return Err(ModelError::NotOnClass(edge(a, b), color));
    }
    let (first, last) = (section[0], section[section.len() - 1]);
    if section.len() < 3 || edge(first, last) != edge(a, b) {
        return Err(ModelError::BadSection(section.to_vec()));
    }
    let mut classes = c.classes();
    let target = edge(a, b);
    classes[color].retain(|&e| e != target);
    classes[color].extend(section.windows(2).map(|w| edge(w[0], w[1])));
    EdgeColoring::from_classes(classes)
}

/// Appends `new_edges` (an ordered walk starting at an end of the class) to
/// the class of `color`.
pub fn apply_extension(
    c: &EdgeColoring,
    color: usize,
    new_edges: &[Edge],
) -> Result<EdgeColoring, ModelError> {
    let mut classes = c.classes();
    let shape = classify_class(&classes[color]);
    if shape.kind != ShapeKind::Path {
        return Err(ModelError::ShapeError(format!("color {color} is not a path")));
    }
    let seq = &shape.vertex_sequence;
    let (s, t) = (seq[0], seq[seq.len() - 1]);
    let Some(&(x, y)) = new_edges.first() else {
        return Ok(c.clone());
    };
    let mut tip = if x == s || x == t {
        y
    } else if y == s || y == t {
        x
    } else if seq.contains(&x) || seq.contains(&y) {
        return Err(ModelError::CreatesBranch);
    } else {
        return Err(ModelError::NotAnEndpoint);
    };
    for &(p, q) in &new_edges[1..] {
        tip = if p == tip {
            q
        } else if q == tip {
            p
        } else {
            return Err(ModelError::CreatesBranch);
        };
    }
    classes[color].extend(new_edges.iter().map(|&(p, q)| edge(p, q)));
    EdgeColoring::from_classes(classes)
}
