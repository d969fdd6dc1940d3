mod common;

use common::graph;
use decomp_model::verify_good_coloring;
use exact_oracle::{min_path_decomposition, random_min_degree5_planar, random_planar_graph};
use graph_core::families;
use rule_engine::{decompose, Options, RuleError, Trace};

#[test]
fn triangle_takes_two_paths() {
    let d = decompose(&families::complete(3), &Options::default()).unwrap();
    assert_eq!(d.coloring.num_colors(), 2);
    assert!(d.relaxed);
    assert!(d.meets_bound);
}

#[test]
fn k5_minus_takes_three_paths() {
    let g = families::k5_minus();
    let d = decompose(&g, &Options::default()).unwrap();
    assert_eq!(d.coloring.num_colors(), 3);
    assert!(d.relaxed);
    assert!(verify_good_coloring(&g, &d.coloring, true).unwrap().ok);
    assert_eq!(min_path_decomposition(&g, u64::MAX).unwrap().min_paths, 3);
}

#[test]
fn long_path_is_one_color() {
    let d = decompose(&families::path(100), &Options::default()).unwrap();
    assert_eq!(d.coloring.num_colors(), 1);
    assert!(d.meets_bound);
}

#[test]
fn single_edge_and_edgeless() {
    let d = decompose(&graph(2, &[(0, 1)]), &Options::default()).unwrap();
    assert_eq!(d.coloring.num_colors(), 1);
    let d = decompose(&graph(1, &[]), &Options::default()).unwrap();
    assert_eq!(d.coloring.num_colors(), 0);
}

#[test]
fn rejects_bad_inputs() {
    let two = graph(4, &[(0, 1), (2, 3)]);
    assert_eq!(
        decompose(&two, &Options::default()).unwrap_err(),
        RuleError::InvalidInput("graph not connected".into())
    );
    let err = decompose(&families::complete(5), &Options::default()).unwrap_err();
    assert!(err.to_string().contains("not planar"));
}

#[test]
fn icosahedron_goes_through_a_four_family() {
    let g = families::icosahedron();
    let d = decompose(&g, &Options::default()).unwrap();
    assert!(d.meets_bound);
    assert_eq!(d.coloring.num_colors(), 6);
    let first = d.trace.firings().last().unwrap();
    assert_eq!(first.n, 12);
    assert!(first.rule_id.starts_with(['D', 'J', 'R']));
    assert_eq!(first.budget_after, first.budget_before + 2);
}

#[test]
fn firings_shrink_and_respect_the_contract() {
    for seed in 0..40 {
        let n = 9 + (seed as usize % 20);
        let g = random_planar_graph(n, 2 * n, seed);
        if !g.is_connected() {
            continue;
        }
        let d = decompose(&g, &Options::default()).unwrap();
        assert!(d.meets_bound, "seed {seed}");
        assert_eq!(d.trace.fallbacks(), 0, "seed {seed}");
        for s in d.trace.firings() {
            assert!(s.checks.unwrap().all(), "seed {seed}: {s:?}");
            assert!(s.budget_after <= s.budget_before + 2);
        }
    }
}

#[test]
fn minimum_degree_five_graphs() {
    let mut done = 0;
    for seed in 0..30 {
        let Some(g) = random_min_degree5_planar(14 + (seed as usize % 12), 0, seed) else {
            continue;
        };
        let d = decompose(&g, &Options::default()).unwrap();
        assert!(d.meets_bound, "seed {seed}");
        assert!(d.trace.firings().any(|s| s.rule_id.starts_with(['D', 'J', 'R'])));
        done += 1;
    }
    assert!(done >= 10);
}

#[test]
fn trace_json_round_trips() {
    let g = random_planar_graph(24, 50, 7);
    let d = decompose(&g, &Options::default()).unwrap();
    let text = d.trace.to_json();
    assert_eq!(Trace::parse(&text).unwrap(), d.trace);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    let first = &raw.as_array().unwrap()[0];
    assert!(first.get("rule_id").is_some());
    assert!(first.get("budget_before").is_some());
}

#[test]
fn same_input_same_trace() {
    let g = random_planar_graph(30, 60, 3);
    let a = decompose(&g, &Options::default()).unwrap();
    let b = decompose(&g, &Options::default()).unwrap();
    assert_eq!(a.trace, b.trace);
    assert_eq!(a.coloring, b.coloring);
}

#[test]
fn small_graphs_go_to_the_oracle() {
    let g = families::octahedron();
    let d = decompose(&g, &Options::default()).unwrap();
    assert_eq!(d.trace.steps.len(), 1);
    assert_eq!(d.trace.steps[0].rule_id, "oracle");
    let d = decompose(&g, &Options { exact_threshold: 2, ..Options::default() }).unwrap();
    assert!(d.trace.firings().count() >= 1);
    assert!(d.meets_bound);
}
