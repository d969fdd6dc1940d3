use decomp_model::EdgeColoring;
use graph_core::Graph;

/// Quick upper bound: peel paths greedily, starting at odd vertices first and
/// always stepping to the unvisited neighbor with the most unused edges.
pub fn greedy_paths(g: &Graph) -> EdgeColoring {
    let n = g.n();
    let mut used = vec![false; g.m()];
    let mut left: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut colors = vec![0usize; g.m()];
    let mut color = 0;
    loop {
        let start = (0..n)
            .filter(|&v| left[v] > 0)
            .min_by_key(|&v| (left[v].is_multiple_of(2), v));
        let Some(mut v) = start else { break };
        let mut on_path = vec![false; n];
        on_path[v] = true;
        loop {
            let next = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !on_path[w] && !used[g.edge_index(v, w).unwrap()])
                .max_by_key(|&w| (left[w], std::cmp::Reverse(w)));
            let Some(w) = next else { break };
            let e = g.edge_index(v, w).unwrap();
            used[e] = true;
            colors[e] = color;
            left[v] -= 1;
            left[w] -= 1;
            on_path[w] = true;
            v = w;
        }
        color += 1;
    }
    EdgeColoring::for_graph(g, colors)
}
