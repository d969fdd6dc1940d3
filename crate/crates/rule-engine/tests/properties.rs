use decomp_model::verify_good_coloring;
use exact_oracle::{random_planar_graph, random_triangulation};
use graph_core::Graph;
use proptest::prelude::*;
use rule_engine::{decompose, Options};

fn planar() -> impl Strategy<Value = Graph> {
    (8usize..32, 0usize..3, any::<u64>(), any::<bool>())
        .prop_map(|(n, extra, seed, tri)| {
            if tri {
                random_triangulation(n, seed)
            } else {
                random_planar_graph(n, (n + extra * n / 2).min(3 * n - 6), seed)
            }
        })
        .prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn output_is_a_good_coloring(g in planar()) {
        let d = decompose(&g, &Options::default()).unwrap();
        let r = verify_good_coloring(&g, &d.coloring, d.relaxed).unwrap();
        prop_assert_eq!(r.ok, d.meets_bound);
        prop_assert!(d.meets_bound);
    }

    #[test]
    fn every_firing_keeps_the_contract(g in planar()) {
        let d = decompose(&g, &Options::default()).unwrap();
        for s in d.trace.firings() {
            prop_assert!(s.checks.unwrap().all(), "{:?}", s);
            prop_assert!(s.budget_after <= s.budget_before + 2);
        }
    }

    #[test]
    fn traces_end_at_the_input(g in planar()) {
        let d = decompose(&g, &Options::default()).unwrap();
        let last = d.trace.steps.last().unwrap();
        prop_assert_eq!(last.n, g.n());
        prop_assert_eq!(last.budget_after, d.coloring.num_colors());
    }

    #[test]
    fn decompose_is_deterministic(g in planar()) {
        let a = decompose(&g, &Options::default()).unwrap();
        let b = decompose(&g, &Options::default()).unwrap();
        prop_assert_eq!(a.trace.to_json(), b.trace.to_json());
        prop_assert_eq!(a.coloring, b.coloring);
    }

    #[test]
    fn lower_threshold_still_meets_the_bound(g in planar()) {
        let d = decompose(&g, &Options { exact_threshold: 2, ..Options::default() }).unwrap();
        prop_assert!(d.meets_bound);
    }
}
