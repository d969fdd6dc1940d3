use graph_core::families::*;
use graph_core::*;
use proptest::prelude::*;

#[test]
fn triangle_edge_list() {
    let g = parse_graph("0 1\n1 2\n2 0").unwrap();
    assert_eq!((g.n(), g.m()), (3, 3));
    assert_eq!(classify_exception(&g), Exception::K3);
}

#[test]
fn k5_minus_from_text() {
    let text = "0 1\n0 2\n0 3\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let g = parse_graph(text).unwrap();
    assert_eq!((g.n(), g.m()), (5, 9));
    assert_eq!(g, k5_minus());
}

#[test]
fn rejects_duplicates_and_loops() {
    assert_eq!(parse_graph("0 1\n0 1"), Err(GraphError::DuplicateEdge(0, 1)));
    assert_eq!(parse_graph("0 1\n1 0"), Err(GraphError::DuplicateEdge(0, 1)));
    assert_eq!(parse_graph("2 2"), Err(GraphError::Loop(2)));
    assert!(matches!(
        parse_graph("0 1\n1 x"),
        Err(GraphError::Parse { line: 2, .. })
    ));
    assert!(matches!(
        parse_graph("0 1 2"),
        Err(GraphError::Parse { line: 1, .. })
    ));
}

#[test]
fn comments_and_isolated_vertices() {
    let g = parse_graph("# a comment\n0 1 # trailing\n\n4\n").unwrap();
    assert_eq!((g.n(), g.m()), (5, 1));
    assert_eq!(parse_graph(&to_edge_list(&g)).unwrap(), g);
}

#[test]
fn graph6_known_words() {
    // Reference encodings produced by networkx.to_graph6_bytes.
    assert_eq!(to_graph6(&complete(4)), "C~");
    assert_eq!(to_graph6(&path(3)), "Bg");
    assert_eq!(to_graph6(&complete(5)), "D~{");
    assert_eq!(parse_graph6("C~").unwrap(), complete(4));
    assert_eq!(parse_graph(">>graph6<<D~{\n").unwrap(), complete(5));
    assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    assert!(parse_graph6("C~~").is_err());
}

#[test]
fn graph6_large_header() {
    let g = path(70);
    let word = to_graph6(&g);
    assert!(word.starts_with('~'));
    assert_eq!(parse_graph6(&word).unwrap(), g);
}

#[test]
fn planarity_panel() {
    assert!(is_planar(&complete(4)));
    assert!(!is_planar(&complete(5)));
    assert!(!is_planar(&complete_bipartite(3, 3)));
    assert!(is_planar(&k5_minus()));
    assert!(is_planar(&octahedron()));
    assert!(is_planar(&icosahedron()));
    assert!(is_planar(&star(9)));
    assert!(is_planar(&wheel(12)));
    // Petersen graph: 15 edges, below the 3n-6 filter, still not planar.
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert!(!is_planar(&petersen));
}

/// Counts labeled connected and connected planar graphs on `n` vertices by
/// walking all edge subsets.
fn labeled_counts(n: usize) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let (mut conn, mut planar) = (0, 0);
    for mask in 0u32..(1 << pairs.len()) {
        let g = Graph::from_edges_dedup(
            n,
            (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]),
        );
        if g.is_connected() {
            conn += 1;
            planar += is_planar(&g) as usize;
        }
    }
    (conn, planar)
}

#[test]
fn labeled_planar_counts_match_reference() {
    // Reference values computed independently with networkx
    // (check_planarity over all labeled connected graphs).
    assert_eq!(labeled_counts(4), (38, 38));
    assert_eq!(labeled_counts(5), (728, 727));
    assert_eq!(labeled_counts(6), (26704, 26013));
}

#[test]
fn components_examples() {
    assert_eq!(complete(3).connected_components(), vec![vec![0, 1, 2]]);
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
    assert_eq!(
        Graph::empty(3).connected_components(),
        vec![vec![0], vec![1], vec![2]]
    );
}

#[test]
fn cut_examples() {
    let cuts = enumerate_cuts(&path(3), 1);
    assert_eq!(cuts.len(), 1);
    assert_eq!(cuts[0].vertices, vec![1]);
    assert_eq!(cuts[0].separated_witness, (0, 2));
    assert!(enumerate_cuts(&complete(4), 3).is_empty());
    let cuts = enumerate_cuts(&k5_minus(), 3);
    assert_eq!(cuts.len(), 1);
    assert_eq!(cuts[0].vertices, vec![1, 2, 3]);
    assert_eq!(cuts[0].separated_witness, (0, 4));
    assert_eq!(connectivity_at_most(&icosahedron(), 4), 5);
    assert_eq!(connectivity_at_most(&octahedron(), 4), 4);
}

#[test]
fn exception_classifier() {
    assert_eq!(classify_exception(&complete(3)), Exception::K3);
    let relabeled = complete(5).edited(&[], &[(1, 3)]);
    assert_eq!(classify_exception(&relabeled), Exception::K5Minus);
    assert_eq!(classify_exception(&cycle(4)), Exception::Other);
    assert_eq!(classify_exception(&complete(5)), Exception::Other);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        e.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, e).unwrap()
        })
    })
}

/// Naive cut oracle: bitmask subsets, union-find on the survivors.
fn naive_cuts(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > k {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(a, b) in g.edges() {
            if mask >> a & 1 == 0 && mask >> b & 1 == 0 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let mut roots: Vec<usize> = (0..n)
            .filter(|&v| mask >> v & 1 == 0)
            .map(|v| find(&mut parent, v))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() >= 2 {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn adjacency_is_consistent(g in arb_graph(12)) {
        for v in 0..g.n() {
            prop_assert_eq!(g.degree(v), g.neighbors(v).len());
            for &w in g.neighbors(v) {
                prop_assert!(g.neighbors(w).contains(&v));
                prop_assert!(g.edge_index(v, w).is_some());
            }
        }
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn cuts_agree_with_naive_oracle(g in arb_graph(8), k in 1usize..=3) {
        prop_assume!(g.is_connected());
        let ours: Vec<Vec<usize>> = enumerate_cuts(&g, k).into_iter().map(|c| {
            let comps = g.components_avoiding(&c.vertices);
            let (a, b) = c.separated_witness;
            let ca = comps.iter().position(|s| s.contains(&a));
            let cb = comps.iter().position(|s| s.contains(&b));
            assert!(ca.is_some() && cb.is_some() && ca != cb);
            c.vertices
        }).collect();
        prop_assert_eq!(ours, naive_cuts(&g, k));
    }

    #[test]
    fn trees_are_planar(parents in proptest::collection::vec(any::<prop::sample::Index>(), 0..40)) {
        let n = parents.len() + 1;
        let e = parents.iter().enumerate().map(|(i, p)| (i + 1, p.index(i + 1)));
        prop_assert!(is_planar(&Graph::from_edges(n, e).unwrap()));
    }
}
