use exact_oracle::random_min_degree5_planar;
use graph_core::{families, Graph};
use proptest::prelude::*;
use structure_analysis::{find_configuration, is_almost_4_connected, ConfigurationKind};
use subdivision::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

fn sub(kind: Kind, paths: &[&[usize]]) -> Subdivision {
    Subdivision::new(kind, [0, 1, 2, 3], paths.iter().map(|p| p.to_vec()).collect())
}

/// Every path simple, every pair of paths internally disjoint: a naive
/// check that shares nothing with the search.
fn all_simple_paths(g: &Graph, a: usize, b: usize, roots: &[usize]) -> Vec<Vec<usize>> {
    fn go(g: &Graph, cur: &mut Vec<usize>, b: usize, roots: &[usize], out: &mut Vec<Vec<usize>>) {
        let x = *cur.last().unwrap();
        for &y in g.neighbors(x) {
            if y == b {
                let mut p = cur.clone();
                p.push(b);
                out.push(p);
            } else if !roots.contains(&y) && !cur.contains(&y) {
                cur.push(y);
                go(g, cur, b, roots, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![a], b, roots, &mut out);
    out
}

fn brute_force_k4(g: &Graph, r: [usize; 4]) -> bool {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let options: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(i, j)| all_simple_paths(g, r[i], r[j], &r))
        .collect();
    fn pick(options: &[Vec<Vec<usize>>], k: usize, used: &mut Vec<usize>) -> bool {
        if k == options.len() {
            return true;
        }
        for p in &options[k] {
            let inner = &p[1..p.len() - 1];
            if inner.iter().any(|v| used.contains(v)) {
                continue;
            }
            let before = used.len();
            used.extend_from_slice(inner);
            if pick(options, k + 1, used) {
                return true;
            }
            used.truncate(before);
        }
        false
    }
    pick(&options, 0, &mut Vec::new())
}

/// Roots 0,1,3,2 around the outer face: two doubled sides, two single ones.
fn c4plus_only() -> Graph {
    graph(
        8,
        &[(0, 4), (4, 1), (1, 2), (2, 5), (5, 3), (3, 0), (0, 6), (6, 1), (3, 7), (7, 2)],
    )
}

/// Base K4-subdivision for the pattern tests: roots 0..3, the three edges
/// at root 0 direct, the other pairs through 4, 5, 6.
fn base_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (1, 4), (4, 2), (1, 5), (5, 3), (2, 6), (6, 3)]
}

fn base_sub() -> Subdivision {
    sub(Kind::K4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 4, 2], &[1, 5, 3], &[2, 6, 3]])
}

#[test]
fn k4_roots_give_the_edges_themselves() {
    let g = families::complete(4);
    let s = find_rooted_k4(&g, [0, 1, 2, 3], DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
    assert_eq!(s.length(), 6);
    assert!(validate_subdivision(&g, &s).ok);
    assert_eq!(find_k_subdivision(&g, [0, 1, 2, 3], DEFAULT_SEARCH_BUDGET).unwrap().kind, Kind::K4);
}

#[test]
fn octahedron_equator_uses_both_poles() {
    let g = families::octahedron();
    let s = find_rooted_k4(&g, [2, 4, 3, 5], DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
    assert!(validate_subdivision(&g, &s).ok);
    let mut inner: Vec<usize> = s.paths.iter().flat_map(|p| p[1..p.len() - 1].to_vec()).collect();
    inner.sort_unstable();
    assert_eq!(inner, vec![0, 1]);
}

#[test]
fn roots_on_one_face_only_have_a_c4plus() {
    let g = c4plus_only();
    let u = [0, 1, 2, 3];
    assert!(!brute_force_k4(&g, u));
    assert_eq!(find_rooted_k4(&g, u, DEFAULT_SEARCH_BUDGET).unwrap(), None);
    let s = find_k_subdivision(&g, u, DEFAULT_SEARCH_BUDGET).unwrap();
    assert_eq!(s.kind, Kind::C4Plus);
    assert!(s.star);
    let r = validate_subdivision(&g, &s);
    assert!(r.ok, "{r:?}");
    assert_eq!(s.link(0, 1), 2);
    assert_eq!(s.link(2, 3), 2);
    assert_eq!(s.link(0, 3), 1);
    assert_eq!(s.link(1, 2), 1);
    assert!(star_violations(&g, &s).is_empty());
}

#[test]
fn roots_on_a_chorded_cycle_have_nothing() {
    // Outer cycle through the roots with a triangle at every root: no two
    // internally disjoint paths between any pair of consecutive roots.
    let g = graph(
        12,
        &[
            (0, 4), (4, 5), (5, 1), (1, 6), (6, 7), (7, 2), (2, 8), (8, 9), (9, 3), (3, 10),
            (10, 11), (11, 0), (4, 11), (5, 6), (7, 8), (9, 10),
        ],
    );
    let u = [0, 1, 2, 3];
    assert!(!brute_force_k4(&g, u));
    assert!(matches!(
        find_k_subdivision(&g, u, DEFAULT_SEARCH_BUDGET),
        Err(SubdivisionError::NotFound { .. })
    ));
}

#[test]
fn icosahedron_families_get_a_subdivision() {
    let g = families::icosahedron();
    for u in [[0, 1, 6, 11], [0, 3, 8, 11], [1, 2, 3, 4], [2, 5, 7, 9]] {
        assert!(is_almost_4_connected(&g, &u).is_ok());
        let s = find_k_subdivision(&g, u, DEFAULT_SEARCH_BUDGET).unwrap();
        let r = validate_subdivision(&g, &s);
        assert!(r.ok, "{u:?}: {r:?}");
    }
}

#[test]
fn chords_are_shortcut() {
    let mut e = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    e.extend([(0, 4), (4, 5), (5, 1), (4, 1)]);
    let g = graph(6, &e);
    let s = sub(Kind::K4, &[&[0, 4, 5, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let t = eliminate_chords(&g, &s);
    assert_eq!(t.paths[0], vec![0, 4, 1]);
    assert!(t.length() < s.length());
    // A chordless input is a fixpoint.
    let k4 = families::complete(4);
    let s = sub(Kind::K4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    assert_eq!(eliminate_chords(&k4, &s), s);
}

#[test]
fn root_chord_that_is_already_a_path_stays() {
    // C4+ with the doubled pair 0,1 realized by the edge and by (0,4,1).
    let g = graph(7, &[(0, 1), (0, 4), (4, 1), (2, 5), (5, 3), (2, 3), (0, 2), (1, 3), (3, 6)]);
    let s = sub(Kind::C4Plus, &[&[0, 1], &[0, 4, 1], &[2, 3], &[2, 5, 3], &[0, 2], &[1, 3]]);
    assert_eq!(eliminate_chords(&g, &s), s);
}

#[test]
fn chordless_k4_is_strong() {
    let g = families::complete(4);
    let s = find_k_subdivision(&g, [0, 1, 2, 3], DEFAULT_SEARCH_BUDGET).unwrap();
    let p = check_properties(&g, &s);
    assert!(p.holds_a() && p.holds_b() && p.holds_c());
}

#[test]
fn root_chord_with_triangle_breaks_property_a() {
    let mut e = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)];
    e.extend([(0, 5), (0, 6), (6, 5)]);
    let g = graph(7, &e);
    let s = sub(Kind::K4, &[&[0, 4, 5, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let p = check_properties(&g, &s);
    assert_eq!(p.a, Some(PropertyWitness::AChord { root: 0, path: 0, chord: (0, 5) }));
}

#[test]
fn two_common_adjacent_neighbors_break_property_c() {
    let e = [
        (0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (5, 6), (0, 5), (0, 6), (1, 5),
        (1, 6),
    ];
    let g = graph(7, &e);
    let s = sub(Kind::K4, &[&[0, 4, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let p = check_properties(&g, &s);
    let Some(PropertyWitness::Redirection(step)) = p.c else { panic!("{p:?}") };
    assert_eq!(step.kind, Redirection::X4);
    assert_eq!(step.new_path, vec![0, 6, 1]);
    let (t, steps) = redirect(&g, &s).unwrap();
    assert_eq!(steps.len(), 1);
    assert!(check_properties(&g, &t).strong());
}

#[test]
fn redirect_leaves_property_c_subdivisions_alone() {
    let g = families::complete(4);
    let s = sub(Kind::K4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let (t, steps) = redirect(&g, &s).unwrap();
    assert!(steps.is_empty());
    assert_eq!(t, s);
}

fn x1_graph(v1_sees_w1: bool, v2_sees_w2: bool) -> Graph {
    let mut e = vec![(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    e.extend([(0, 5), (1, 5), (0, 6), (1, 7), (6, 5), (7, 5)]);
    if v1_sees_w1 {
        e.push((6, 4));
    }
    if v2_sees_w2 {
        e.push((7, 4));
    }
    graph(8, &e)
}

#[test]
fn x1_sends_the_path_through_the_common_neighbor() {
    let g = x1_graph(false, false);
    let s = sub(Kind::K4, &[&[0, 4, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let (t, steps) = redirect(&g, &s).unwrap();
    assert_eq!(steps[0].kind, Redirection::X1);
    assert_eq!(t.paths[0], vec![0, 5, 1]);
    for u in [0, 1] {
        let r = t.remaining_neighbors(&g, u);
        assert!(!g.has_edge(r[0], r[1]), "{u}: {r:?}");
    }
    assert!(check_properties(&g, &t).strong());
}

#[test]
fn x2_goes_through_the_own_neighbor_first() {
    let g = x1_graph(true, true);
    let s = sub(Kind::K4, &[&[0, 4, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let step = find_redirection(&g, &s).unwrap().unwrap();
    assert_eq!(step.kind, Redirection::X2);
    assert_eq!(step.new_path, vec![0, 6, 5, 1]);
    let (t, _) = redirect(&g, &s).unwrap();
    let mut r = t.remaining_neighbors(&g, 0);
    r.sort_unstable();
    assert_eq!(r, vec![4, 5]);
    assert!(!g.has_edge(4, 5));
}

fn routing_graph(extra: &[(usize, usize)]) -> (Graph, Subdivision) {
    let mut e = vec![(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 5), (0, 6), (6, 4)];
    e.extend_from_slice(extra);
    let s = sub(Kind::K4, &[&[0, 4, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    (graph(7, &e), s)
}

#[test]
fn routing_keeps_the_path_when_v2_misses_w() {
    let (g, s) = routing_graph(&[(4, 5)]);
    let t = routing(&g, &s, 0, 5, 4).unwrap();
    assert_eq!(t, s);
    let mut r = t.remaining_neighbors(&g, 0);
    r.sort_unstable();
    assert_eq!(r, vec![5, 6]);
}

#[test]
fn routing_detours_through_v2() {
    let (g, s) = routing_graph(&[(6, 5)]);
    let t = routing(&g, &s, 0, 5, 4).unwrap();
    assert_eq!(t.paths[0], vec![0, 6, 4, 1]);
    let mut r = t.remaining_neighbors(&g, 0);
    r.sort_unstable();
    assert_eq!(r, vec![4, 5]);
    assert!(!g.has_edge(4, 5));
}

#[test]
fn routing_guard() {
    let (g, s) = routing_graph(&[(6, 5), (4, 5)]);
    assert!(matches!(routing(&g, &s, 0, 5, 4), Err(SubdivisionError::GuardFailure { .. })));
}

fn rotation_paths(s: &Subdivision, c: &SubdivisionColoring, order: [usize; 4]) -> bool {
    order.windows(2).all(|w| {
        let p = s.paths_between(w[0], w[1])[0];
        c.path_color[p] == Color::Red
    })
}

#[test]
fn two_color_rotations() {
    let g = families::complete(4);
    let s = sub(Kind::K4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let c = two_color(&s, &[]).unwrap();
    assert_eq!(c.red.len(), 3);
    assert_eq!(c.blue.len(), 3);
    assert!(rotation_paths(&s, &c, [2, 1, 0, 3]));
    let ends: Vec<Color> = c.end_color.iter().map(|&(_, col)| col).collect();
    assert_eq!(ends.iter().filter(|&&x| x == Color::Red).count(), 2);
    assert!(g.m() == c.red.len() + c.blue.len());

    // One problem of u1 = 0 on u2∼u3 = 1∼2.
    let p12 = s.paths_between(1, 2)[0];
    let c = two_color(&s, &[InactivationTarget { root: 0, path: p12 }]).unwrap();
    assert!(rotation_paths(&s, &c, [2, 1, 0, 3]));
    assert_ne!(c.ending_at(0), Some(c.path_color[p12]));

    // Case B: also u3 = 2 on u1∼u4 = 0∼3.
    let p03 = s.paths_between(0, 3)[0];
    let targets = [
        InactivationTarget { root: 0, path: p12 },
        InactivationTarget { root: 2, path: p03 },
    ];
    let c = two_color(&s, &targets).unwrap();
    assert!(rotation_paths(&s, &c, [3, 0, 2, 1]));
    for t in targets {
        assert_ne!(c.ending_at(t.root), Some(c.path_color[t.path]));
    }
}

#[test]
fn all_roots_with_private_non_adjacent_neighbors_are_settled() {
    let mut e = base_edges();
    e.extend([(0, 7), (0, 8), (1, 9), (1, 10), (2, 11), (2, 12), (3, 13), (3, 14)]);
    let g = graph(15, &e);
    let rep = classify_problems(&g, &base_sub());
    assert_eq!(rep.settled, vec![0, 1, 2, 3]);
    assert!(rep.distant.is_empty() && rep.close.is_empty());
    assert!(rep.patterns.iter().all(|p| p.pattern == Some(Pattern::V)));
    assert!(rep.broken_claims.is_empty());
}

#[test]
fn triangle_touching_a_far_path_is_a_distant_problem() {
    let mut e = base_edges();
    e.extend([(0, 6), (0, 7), (6, 7), (1, 9), (1, 10), (2, 11), (2, 12), (3, 13), (3, 14)]);
    let g = graph(15, &e);
    let s = base_sub();
    let rep = classify_problems(&g, &s);
    assert_eq!(
        rep.distant,
        vec![DistantProblem { root: 0, path: 5, pair: (6, 7) }]
    );
    assert!(rep.close.is_empty());
    assert!(!rep.settled.contains(&0));
}

#[test]
fn shared_neighbor_makes_a_close_pair() {
    let mut e = base_edges();
    e.extend([(0, 7), (1, 7), (0, 8), (1, 9), (7, 8), (7, 9), (2, 11), (2, 12), (3, 13), (3, 14)]);
    let g = graph(15, &e);
    let rep = classify_problems(&g, &base_sub());
    assert_eq!(rep.close, vec![vec![0, 1]]);
    assert_eq!(rep.settled, vec![2, 3]);
}

#[test]
fn validator_flags_shared_internal_vertices() {
    let g = graph(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (4, 3)]);
    let s = sub(Kind::K4, &[&[0, 4, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 4, 3]]);
    let r = validate_subdivision(&g, &s);
    assert!(!r.ok);
    assert!(r.violations.iter().any(|v| v.contains("share the internal vertex 4")));
}

#[test]
fn validator_checks_claimed_star_properties() {
    // 0-linked roots 0 and 2 share the remaining neighbor 7.
    let mut e = vec![(0, 1), (0, 4), (4, 1), (2, 3), (2, 5), (5, 3), (0, 3), (1, 2)];
    e.extend([(0, 7), (2, 7)]);
    let g = graph(8, &e);
    let mut s = sub(Kind::C4Plus, &[&[0, 1], &[0, 4, 1], &[2, 3], &[2, 5, 3], &[0, 3], &[1, 2]]);
    assert!(validate_subdivision(&g, &s).ok);
    s.star = true;
    let r = validate_subdivision(&g, &s);
    assert!(!r.ok);
    assert!(r.violations.iter().any(|v| v.contains("0-linked roots 0,2")), "{r:?}");
}

#[test]
fn dot_marks_roots_and_colors() {
    let g = families::complete(4);
    let s = sub(Kind::K4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
    let c = two_color(&s, &[]).unwrap();
    let dot = to_dot(&g, &s, Some(&c));
    assert_eq!(dot.matches("fillcolor=gold").count(), 4);
    assert_eq!(dot.matches("color=red").count(), 3);
    assert_eq!(dot.matches("color=blue").count(), 3);
}

fn pipeline(g: &Graph) -> Result<(), TestCaseError> {
    let w = find_configuration(g).unwrap();
    if w.kind != ConfigurationKind::CII {
        return Ok(());
    }
    let u = w.four_family.unwrap();
    let s = find_k_subdivision(g, u, DEFAULT_SEARCH_BUDGET).unwrap();
    prop_assert!(validate_subdivision(g, &s).ok);
    for i in 0..s.paths.len() {
        prop_assert_eq!(eliminate_chords(g, &s).paths[i].clone(), s.paths[i].clone());
    }
    let (t, steps) = redirect(g, &s).unwrap();
    prop_assert!(steps.len() <= 4);
    prop_assert_eq!(t.kind, s.kind);
    prop_assert!(validate_subdivision(g, &t).ok);
    prop_assert!(check_properties(g, &t).strong());
    let rep = classify_problems(g, &t);
    prop_assert!(rep.broken_claims.is_empty(), "{:?}", rep.broken_claims);
    let c = two_color(&t, &[]).unwrap();
    for &u in &t.roots {
        let red = c.red.iter().filter(|&&(a, b)| a == u || b == u).count();
        let blue = c.blue.iter().filter(|&&(a, b)| a == u || b == u).count();
        prop_assert!((red == 1) ^ (blue == 1));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cii_pipeline_invariants(n in 12usize..40, del in 0usize..4, seed in any::<u64>()) {
        if let Some(g) = random_min_degree5_planar(n, del, seed) {
            pipeline(&g)?;
        }
    }
}
