use decomp_model::{classify_class, ShapeKind};
use graph_core::{edge, Edge};
use serde::Serialize;

use crate::{Kind, Subdivision, SubdivisionError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    Red,
    Blue,
}

/// Root `root` must not end on the color of path `path`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InactivationTarget {
    pub root: usize,
    pub path: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionColoring {
    /// Color of each path of the subdivision, by index.
    pub path_color: Vec<Color>,
    pub red: Vec<Edge>,
    pub blue: Vec<Edge>,
    /// The color ending at each root, in the order of `roots`.
    pub end_color: [(usize, Color); 4],
}

impl SubdivisionColoring {
    pub fn color_of(&self, a: usize, b: usize) -> Option<Color> {
        let e = edge(a, b);
        if self.red.binary_search(&e).is_ok() {
            Some(Color::Red)
        } else if self.blue.binary_search(&e).is_ok() {
            Some(Color::Blue)
        } else {
            None
        }
    }

    pub fn ending_at(&self, u: usize) -> Option<Color> {
        self.end_color.iter().find(|(r, _)| *r == u).map(|&(_, c)| c)
    }
}

fn build(s: &Subdivision, colors: &[Color]) -> Option<SubdivisionColoring> {
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for (p, &c) in s.paths.iter().zip(colors) {
        let target = if c == Color::Red { &mut red } else { &mut blue };
        target.extend(p.windows(2).map(|w| edge(w[0], w[1])));
    }
    red.sort_unstable();
    blue.sort_unstable();
    for class in [&red, &blue] {
        if classify_class(class).kind != ShapeKind::Path {
            return None;
        }
    }
    let mut end_color = [(0, Color::Red); 4];
    for (k, &u) in s.roots.iter().enumerate() {
        let deg_red = red.iter().filter(|&&(a, b)| a == u || b == u).count();
        let deg_blue = blue.iter().filter(|&&(a, b)| a == u || b == u).count();
        end_color[k] = match (deg_red, deg_blue) {
            (1, 2) => (u, Color::Red),
            (2, 1) => (u, Color::Blue),
            _ => return None,
        };
    }
    Some(SubdivisionColoring {
        path_color: colors.to_vec(),
        red,
        blue,
        end_color,
    })
}

/// Colors for a red path u_a → u_b → u_c → u_d on a K4-subdivision.
fn rotation(s: &Subdivision, order: [usize; 4]) -> Option<Vec<Color>> {
    let mut colors = vec![Color::Blue; s.paths.len()];
    for w in order.windows(2) {
        let p = *s.paths_between(w[0], w[1]).first()?;
        colors[p] = Color::Red;
    }
    Some(colors)
}

/// Relabels the roots so that the first target reads "u1 on u2∼u3" and
/// returns the two fixed rotations that inactivate the usual cases.
fn preferred(s: &Subdivision, targets: &[InactivationTarget]) -> Vec<Vec<Color>> {
    if s.kind != Kind::K4 {
        return Vec::new();
    }
    let (u1, (u2, u3)) = match targets.first() {
        Some(t) => (t.root, s.ends(t.path)),
        None => (s.roots[0], (s.roots[1], s.roots[2])),
    };
    let Some(&u4) = s.roots.iter().find(|&&r| r != u1 && r != u2 && r != u3) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    out.extend(rotation(s, [u3, u2, u1, u4]));
    out.extend(rotation(s, [u4, u1, u3, u2]));
    out
}

/// A red/blue coloring of the paths in which both classes are paths and
/// every target is inactive: the color ending at the target root differs
/// from the color of the target path.
pub fn two_color(
    s: &Subdivision,
    targets: &[InactivationTarget],
) -> Result<SubdivisionColoring, SubdivisionError> {
    let ok = |c: &SubdivisionColoring| {
        targets
            .iter()
            .all(|t| c.ending_at(t.root) != Some(c.path_color[t.path]))
    };
    for colors in preferred(s, targets) {
        if let Some(c) = build(s, &colors) {
            if ok(&c) {
                return Ok(c);
            }
        }
    }
    let k = s.paths.len();
    for mask in 0u32..1 << k {
        let colors: Vec<Color> = (0..k)
            .map(|i| if mask >> i & 1 == 1 { Color::Blue } else { Color::Red })
            .collect();
        if let Some(c) = build(s, &colors) {
            if ok(&c) {
                return Ok(c);
            }
        }
    }
    Err(SubdivisionError::Unsatisfiable(format!(
        "{} assignments of {k} paths tried against targets {targets:?}",
        1u32 << k
    )))
}

/// Every valid 2-coloring, in the order `two_color` would consider them.
pub fn all_two_colorings(s: &Subdivision) -> Vec<SubdivisionColoring> {
    let k = s.paths.len();
    (0u32..1 << k)
        .filter_map(|mask| {
            let colors: Vec<Color> = (0..k)
                .map(|i| if mask >> i & 1 == 1 { Color::Blue } else { Color::Red })
                .collect();
            build(s, &colors)
        })
        .collect()
}
