use graph_core::Graph;

use crate::{Color, Subdivision, SubdivisionColoring};

/// DOT rendering with the roots filled and the paths of S drawn bold, in
/// red and blue when a coloring is given.
pub fn to_dot(g: &Graph, s: &Subdivision, coloring: Option<&SubdivisionColoring>) -> String {
    let mut out = String::from("graph S {\n");
    for v in 0..g.n() {
        if s.is_root(v) {
            out.push_str(&format!("  {v} [style=filled, fillcolor=gold];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for &(a, b) in g.edges() {
        let attr = match (s.has_edge(a, b), coloring.and_then(|c| c.color_of(a, b))) {
            (_, Some(Color::Red)) => " [color=red, penwidth=2]",
            (_, Some(Color::Blue)) => " [color=blue, penwidth=2]",
            (true, None) => " [penwidth=2]",
            (false, None) => "",
        };
        out.push_str(&format!("  {a} -- {b}{attr};\n"));
    }
    out.push_str("}\n");
    out
}
