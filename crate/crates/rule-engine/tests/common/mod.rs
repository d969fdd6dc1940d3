#![allow(dead_code)]

use decomp_model::{verify_path_coloring, EdgeColoring};
use graph_core::{Edge, Graph};
use rule_engine::{decompose, Options, Reduction};

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

/// Colors G' component by component with the driver and glues the results
/// back onto the vertex ids of G.
pub fn reduced_coloring(red: &Reduction) -> EdgeColoring {
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for comp in red.graph.components_avoiding(&red.special) {
        if comp.len() < 2 {
            continue;
        }
        let (h, map) = red.graph.induced(&comp);
        let d = decompose(&h, &Options::default()).unwrap();
        classes.extend(d.coloring.relabeled(&map).classes());
    }
    EdgeColoring::from_classes(classes).unwrap()
}

pub fn is_path_coloring(g: &Graph, c: &EdgeColoring) -> bool {
    verify_path_coloring(g, c, false).is_ok_and(|r| r.ok)
}

/// Rule id, order, edges, and the pair the rule is matched on.
pub type Fixture = (&'static str, usize, &'static [(usize, usize)], (usize, usize));

/// Witness graphs: for each rule of the first family, a graph and the pair
/// whose neighborhoods form it.
pub const CI_FIXTURES: &[Fixture] = &[
    ("CNP+CNP", 4, &[(0, 1), (0, 2), (0, 3)], (1, 2)),
    ("Ct", 4, &[(0, 2), (0, 3), (1, 2), (1, 3)], (0, 1)),
    ("Xs", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], (2, 3)),
    ("Xm", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], (0, 1)),
    ("Xt", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], (2, 3)),
    ("Xup", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)], (2, 4)),
    ("Xk", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)], (1, 2)),
    ("Xl", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], (3, 4)),
    ("Xr", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)], (1, 2)),
    ("Xc", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)], (1, 2)),
    (
        "CVpp+CNP",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (3, 4)],
        (2, 5),
    ),
    (
        "Xp",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 4), (3, 4)],
        (1, 5),
    ),
    (
        "Xe",
        6,
        &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4)],
        (2, 3),
    ),
    (
        "Xg",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4)],
        (2, 3),
    ),
    (
        "Xa",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4)],
        (3, 4),
    ),
    (
        "Xf",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4)],
        (4, 5),
    ),
    (
        "Xd",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 4), (3, 4), (3, 5)],
        (1, 2),
    ),
    (
        "Xo",
        6,
        &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        (0, 1),
    ),
    (
        "Xj",
        6,
        &[(0, 1), (0, 4), (0, 5), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
        (0, 1),
    ),
    (
        "Xi",
        6,
        &[(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
        (0, 1),
    ),
    (
        "Xbb",
        7,
        &[
            (0, 1), (0, 2), (0, 3), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 6), (2, 3), (2, 6), (3, 4),
            (3, 5), (4, 5),
        ],
        (4, 5),
    ),
    (
        "Xlp",
        7,
        &[
            (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6),
            (3, 4), (3, 6), (4, 5),
        ],
        (2, 3),
    ),
    (
        "Xh",
        10,
        &[
            (0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (1, 8), (2, 5), (2, 7), (2, 8), (3, 4),
            (3, 5), (3, 9), (4, 6), (4, 8), (4, 9), (5, 7), (5, 9), (6, 8), (6, 9), (7, 8), (7, 9),
        ],
        (2, 7),
    ),
    (
        "Xn",
        14,
        &[
            (0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (0, 10), (0, 12), (1, 2), (1, 7), (1, 12), (2, 3), (2, 5),
            (2, 6), (2, 7), (3, 5), (3, 9), (4, 6), (4, 10), (5, 9), (6, 10), (6, 11), (6, 12), (6, 13),
            (7, 12), (8, 11), (8, 12), (10, 11), (10, 12), (10, 13),
        ],
        (3, 5),
    ),
];
