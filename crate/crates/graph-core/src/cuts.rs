use crate::Graph;

/// A vertex set whose removal disconnects the graph, with one pair of
/// vertices that end up in different components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut {
    pub vertices: Vec<usize>,
    pub separated_witness: (usize, usize),
}

/// Every vertex set of size `1..=k` whose removal leaves at least two
/// components, in lexicographic order of the (sorted) sets. Brute force.
pub fn enumerate_cuts(g: &Graph, k: usize) -> Vec<VertexCut> {
    let mut out = Vec::new();
    for_each_subset(g.n(), k, |set| {
        if let Some(w) = separation_witness(g, set) {
            out.push(VertexCut {
                vertices: set.to_vec(),
                separated_witness: w,
            });
        }
        true
    });
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// If deleting `cut` disconnects what remains, the smallest vertices of the
/// first two components.
pub fn separation_witness(g: &Graph, cut: &[usize]) -> Option<(usize, usize)> {
    let comps = g.components_avoiding(cut);
    (comps.len() >= 2).then(|| (comps[0][0], comps[1][0]))
}

/// Calls `f` on every sorted subset of `0..n` with 1 to `k` elements, by
/// increasing size. Stops early when `f` returns false.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    fn rec(
        start: usize,
        n: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for v in start..n {
            cur.push(v);
            let go_on = rec(v + 1, n, size, cur, f);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut cur = Vec::with_capacity(k);
    for size in 1..=k.min(n) {
        if !rec(0, n, size, &mut cur, &mut f) {
            return;
        }
    }
}

/// Smallest vertex cut size, capped at `cap + 1` (returned when no cut of
/// size `<= cap` exists). Complete graphs report `n - 1`.
pub fn connectivity_at_most(g: &Graph, cap: usize) -> usize {
    if !g.is_connected() {
        return 0;
    }
    let mut best = cap + 1;
    for_each_subset(g.n(), cap, |set| {
        if set.len() >= best {
            return false;
        }
        if separation_witness(g, set).is_some() {
            best = set.len();
            return false;
        }
        true
    });
    best.min(g.n().saturating_sub(1))
}
