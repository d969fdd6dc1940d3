use decomp_model::{classify_class, EdgeColoring, ShapeKind};
use graph_core::{edge, Edge};
use serde::Serialize;

/// One step of a recoloring program. Colors are indices into the class list
/// being edited; indices at or past its end denote new colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Primitive {
    /// A new color on the given walk.
    AssignNewColor { edges: Vec<(usize, usize)> },
    /// The color of `edge` is rerouted through `through`.
    Deviate { edge: Edge, through: Vec<usize> },
    /// The lowest color with an end at `at` grows along `edges`.
    Extend { at: usize, edges: Vec<(usize, usize)> },
    /// The path of `color` is cut at `at`; the part not containing the first
    /// vertex of its sequence becomes a new color.
    SplitColor { color: usize, at: usize },
    RecolorEdge { edge: Edge, color: usize },
}

pub type RecoloringProgram = Vec<Primitive>;

fn degree_in(class: &[Edge], v: usize) -> usize {
    class.iter().filter(|&&(a, b)| a == v || b == v).count()
}

/// Runs `program` on the classes of `pc`. The result is not validated.
pub fn run_program(pc: &EdgeColoring, program: &[Primitive]) -> Result<EdgeColoring, String> {
    let mut classes = pc.classes();
    let locate = |classes: &[Vec<Edge>], e: Edge| classes.iter().position(|cl| cl.contains(&e));
    for step in program {
        match step {
            Primitive::AssignNewColor { edges } => {
                classes.push(edges.iter().map(|&(a, b)| edge(a, b)).collect());
            }
            Primitive::Deviate { edge: e, through } => {
                let e = edge(e.0, e.1);
                let c = locate(&classes, e).ok_or_else(|| format!("edge {e:?} is not colored"))?;
                classes[c].retain(|&x| x != e);
                let mut walk = vec![e.0];
                walk.extend(through);
                walk.push(e.1);
                classes[c].extend(walk.windows(2).map(|w| edge(w[0], w[1])));
            }
            Primitive::Extend { at, edges } => {
                let c = (0..classes.len())
                    .find(|&c| degree_in(&classes[c], *at) == 1)
                    .ok_or_else(|| format!("no color ends at {at}"))?;
                classes[c].extend(edges.iter().map(|&(a, b)| edge(a, b)));
            }
            Primitive::SplitColor { color, at } => {
                let shape = classify_class(classes.get(*color).ok_or("no such color")?);
                if shape.kind != ShapeKind::Path {
                    return Err(format!("color {color} is not a path"));
                }
                let seq = &shape.vertex_sequence;
                let i = seq.iter().position(|v| v == at).ok_or("split point off the path")?;
                let tail: Vec<Edge> = seq[i..].windows(2).map(|w| edge(w[0], w[1])).collect();
                classes[*color].retain(|e| !tail.contains(e));
                classes.push(tail);
            }
            Primitive::RecolorEdge { edge: e, color } => {
                let e = edge(e.0, e.1);
                if let Some(c) = locate(&classes, e) {
                    classes[c].retain(|&x| x != e);
                }
                while classes.len() <= *color {
                    classes.push(Vec::new());
                }
                classes[*color].push(e);
            }
        }
    }
    for cl in &mut classes {
        cl.sort_unstable();
    }
    EdgeColoring::from_classes(classes).map_err(|e| e.to_string())
}

/// A program turning `pc` into `c`, as one recoloring per edge whose color
/// changed or that `pc` did not color. Colors are those of `c`.
pub fn diff_program(pc: &EdgeColoring, c: &EdgeColoring) -> RecoloringProgram {
    c.domain()
        .iter()
        .zip(c.colors_by_edge())
        .filter(|&(&(a, b), &col)| pc.color_of(a, b) != Some(col))
        .map(|(&e, &color)| Primitive::RecolorEdge { edge: e, color })
        .collect()
}
