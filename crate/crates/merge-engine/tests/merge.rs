use std::collections::BTreeSet;

use decomp_model::{classify_class, is_exceptional, verify_path_coloring, EdgeColoring, ShapeKind};
use graph_core::{edge, Edge, Graph};
use merge_engine::{eliminate_cycles, merge_cycle_path, MergeError, MergeOutcome};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seq_edges(s: &[usize]) -> Vec<Edge> {
    s.windows(2).map(|w| edge(w[0], w[1])).collect()
}

fn host(parts: &[&[Edge]]) -> Graph {
    let all: Vec<Edge> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    let n = all.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    Graph::from_edges(n, all).unwrap()
}

fn check_split(c: &[Edge], p: &[Edge], p1: &[Edge], p2: &[Edge]) {
    assert_eq!(classify_class(p1).kind, ShapeKind::Path);
    assert_eq!(classify_class(p2).kind, ShapeKind::Path);
    let want: BTreeSet<Edge> = c.iter().chain(p).copied().collect();
    let got: BTreeSet<Edge> = p1.iter().chain(p2).copied().collect();
    assert_eq!(p1.len() + p2.len(), want.len());
    assert_eq!(got, want);
}

/// Independent check: does some subset of the union form a path whose
/// complement is a path too?
fn splittable_brute(c: &[Edge], p: &[Edge]) -> bool {
    let all: Vec<Edge> = c.iter().chain(p).copied().collect();
    let m = all.len();
    (1u32..(1 << m) - 1).any(|mask| {
        let (a, b): (Vec<Edge>, Vec<Edge>) =
            (0..m).map(|i| (mask >> i & 1 == 1, all[i])).fold(
                (Vec::new(), Vec::new()),
                |(mut a, mut b), (inside, e)| {
                    if inside {
                        a.push(e)
                    } else {
                        b.push(e)
                    }
                    (a, b)
                },
            );
        classify_class(&a).kind == ShapeKind::Path && classify_class(&b).kind == ShapeKind::Path
    })
}

/// The exceptional graph: a 5-cycle and a Hamiltonian path on its complement.
fn exceptional_pair() -> (Vec<Edge>, Vec<Edge>) {
    (seq_edges(&[0, 1, 2, 3, 4, 0]), seq_edges(&[0, 3, 1, 4, 2]))
}

#[test]
fn triangle_plus_pendant() {
    let c = seq_edges(&[0, 1, 2, 0]);
    let p = vec![edge(2, 3)];
    let g = host(&[&c, &p]);
    match merge_cycle_path(&g, &c, &p).unwrap() {
        MergeOutcome::TwoPaths(p1, p2) => check_split(&c, &p, &p1, &p2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn exceptional_graph_is_reported() {
    let (c, p) = exceptional_pair();
    let g = host(&[&c, &p]);
    assert_eq!(merge_cycle_path(&g, &c, &p).unwrap(), MergeOutcome::Exceptional);
    assert!(!splittable_brute(&c, &p));
}

#[test]
fn five_cycle_with_one_pendant_edge() {
    let c = seq_edges(&[0, 1, 2, 3, 4, 0]);
    let p = vec![edge(3, 5)];
    let g = host(&[&c, &p]);
    match merge_cycle_path(&g, &c, &p).unwrap() {
        MergeOutcome::TwoPaths(p1, p2) => check_split(&c, &p, &p1, &p2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn preconditions_are_checked() {
    let c = seq_edges(&[0, 1, 2, 0]);
    let far = vec![edge(3, 4)];
    let g = host(&[&c, &far]);
    assert!(matches!(
        merge_cycle_path(&g, &c, &far),
        Err(MergeError::PreconditionViolated(_))
    ));
    assert!(matches!(
        merge_cycle_path(&g, &far, &c),
        Err(MergeError::PreconditionViolated(_))
    ));
    // Six shared vertices.
    let c6 = seq_edges(&[0, 1, 2, 3, 4, 5, 0]);
    let p6 = seq_edges(&[0, 2, 4, 1, 3, 5]);
    let g6 = host(&[&c6, &p6]);
    assert!(matches!(
        merge_cycle_path(&g6, &c6, &p6),
        Err(MergeError::PreconditionViolated(_))
    ));
}

#[test]
fn eliminate_on_triangle_with_pendant() {
    let c = seq_edges(&[0, 1, 2, 0]);
    let p = vec![edge(0, 3)];
    let g = host(&[&c, &p]);
    let col = EdgeColoring::from_classes([c, p]).unwrap();
    let out = eliminate_cycles(&g, &col, &[]).unwrap();
    assert_eq!(out.num_colors(), 2);
    assert!(verify_path_coloring(&g, &out, false).unwrap().ok);
}

#[test]
fn eliminate_is_identity_without_cycles() {
    let p = seq_edges(&[0, 1, 2, 3]);
    let q = seq_edges(&[1, 3, 0]);
    let g = host(&[&p, &q]);
    let col = EdgeColoring::from_classes([p, q]).unwrap();
    assert_eq!(eliminate_cycles(&g, &col, &[]).unwrap(), col);
}

#[test]
fn eliminate_uses_alternate_companion() {
    let (c, p) = exceptional_pair();
    let q = vec![edge(1, 5)];
    let g = host(&[&c, &p, &q]);
    let col = EdgeColoring::from_classes([c.clone(), p.clone(), q.clone()]).unwrap();
    let out = eliminate_cycles(&g, &col, &[]).unwrap();
    assert_eq!(out.num_colors(), 3);
    assert!(verify_path_coloring(&g, &out, false).unwrap().ok);
    // The exceptional path stays as it was; the cycle went to the pendant.
    assert_eq!(out.class(1), {
        let mut s = p.clone();
        s.sort();
        s
    });

    // Without the extra path there is nothing to merge with.
    let g2 = host(&[&c, &p]);
    let col2 = EdgeColoring::from_classes([c.clone(), p]).unwrap();
    assert!(matches!(
        eliminate_cycles(&g2, &col2, &[]),
        Err(MergeError::NoCompanionPath { color: 0, .. })
    ));
    // A protected companion is skipped.
    assert!(matches!(
        eliminate_cycles(&g, &col, &[2]),
        Err(MergeError::NoCompanionPath { .. })
    ));
}

#[test]
fn eliminate_rejects_touching_cycles() {
    let a = seq_edges(&[0, 1, 2, 0]);
    let b = seq_edges(&[2, 3, 4, 2]);
    let g = host(&[&a, &b]);
    let col = EdgeColoring::from_classes([a, b]).unwrap();
    assert!(matches!(
        eliminate_cycles(&g, &col, &[]),
        Err(MergeError::PreconditionViolated(_))
    ));
}

/// A random cycle on `0..len` and a random path over `0..len+extra` avoiding
/// the cycle's edges, meeting it in 1 to 5 vertices. Five-cycles get extra
/// weight so exceptional pairs show up.
fn random_pair(rng: &mut ChaCha8Rng) -> (Vec<Edge>, Vec<Edge>) {
    loop {
        let len = if rng.gen_bool(0.5) { 5 } else { rng.gen_range(3..=8) };
        let extra = rng.gen_range(0..=3);
        let mut cyc: Vec<usize> = (0..len).collect();
        cyc.shuffle(rng);
        cyc.push(cyc[0]);
        let c = seq_edges(&cyc);
        let cset: BTreeSet<Edge> = c.iter().copied().collect();
        let mut pool: Vec<usize> = (0..len + extra).collect();
        pool.shuffle(rng);
        let plen = rng.gen_range(2..=pool.len().min(8));
        let p = seq_edges(&pool[..plen]);
        if p.iter().any(|e| cset.contains(e)) {
            continue;
        }
        let shared = pool[..plen].iter().filter(|&&v| v < len).count();
        if (1..=5).contains(&shared) {
            return (c, p);
        }
    }
}

#[test]
fn random_pairs_agree_with_exceptional_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut exceptional = 0;
    for _ in 0..2000 {
        let (c, p) = random_pair(&mut rng);
        let g = host(&[&c, &p]);
        let out = merge_cycle_path(&g, &c, &p).unwrap();
        let exc = is_exceptional(&c, &p).unwrap();
        match out {
            MergeOutcome::TwoPaths(p1, p2) => {
                assert!(!exc, "{c:?} {p:?}");
                check_split(&c, &p, &p1, &p2);
            }
            MergeOutcome::Exceptional => {
                assert!(exc, "{c:?} {p:?}");
                exceptional += 1;
            }
        }
    }
    assert!(exceptional > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn search_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, p) = random_pair(&mut rng);
        prop_assume!(c.len() + p.len() <= 14);
        let g = host(&[&c, &p]);
        let out = merge_cycle_path(&g, &c, &p).unwrap();
        prop_assert_eq!(matches!(out, MergeOutcome::TwoPaths(..)), splittable_brute(&c, &p));
    }

    #[test]
    fn eliminate_preserves_count_and_edges(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, p) = random_pair(&mut rng);
        prop_assume!(!is_exceptional(&c, &p).unwrap());
        let g = host(&[&c, &p]);
        let col = EdgeColoring::from_classes([c, p]).unwrap();
        let out = eliminate_cycles(&g, &col, &[]).unwrap();
        prop_assert_eq!(out.num_colors(), col.num_colors());
        prop_assert_eq!(out.domain(), col.domain());
        prop_assert!(verify_path_coloring(&g, &out, false).unwrap().ok);
    }
}
