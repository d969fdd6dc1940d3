use std::collections::VecDeque;

use crate::GraphError;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair to `(min, max)`.
#[inline]
pub fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Simple undirected graph on the vertex ids `0..n`.
///
/// The edge list is kept sorted and every adjacency list is sorted, so two
/// graphs with the same edge set compare equal regardless of how they were
/// built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a.max(b), n));
            }
            list.push(edge(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    /// Like [`Graph::from_edges`] but silently drops duplicates. Loops and
    /// out-of-range ids still panic; this is for internally generated edge
    /// sets that are known to be well formed.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<Edge> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b && a < n && b < n, "bad edge ({a},{b}) for n={n}");
                edge(a, b)
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_unchecked(n, list)
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of the edge in [`Graph::edges`].
    #[inline]
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&edge(a, b)).ok()
    }

    pub fn odd_vertices(&self) -> usize {
        self.adj.iter().filter(|l| l.len() % 2 == 1).count()
    }

    pub fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        let (x, y) = (&self.adj[a], &self.adj[b]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(x[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Same vertex set with extra edges added and some removed. Added edges
    /// that already exist are ignored.
    pub fn edited(&self, add: &[Edge], remove: &[Edge]) -> Graph {
        let mut rm: Vec<Edge> = remove.iter().map(|&(a, b)| edge(a, b)).collect();
        rm.sort_unstable();
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|e| rm.binary_search(e).is_err());
        Graph::from_edges_dedup(self.n, kept.chain(add.iter().copied()))
    }

    /// Subgraph induced by `keep`. The returned map sends new ids to old ids;
    /// new ids follow the order of `keep`.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(a, b)| {
            let (x, y) = (new_id[a], new_id[b]);
            (x != usize::MAX && y != usize::MAX).then_some((x, y))
        });
        (Graph::from_edges_dedup(keep.len(), edges), keep.to_vec())
    }

    /// Removes the given vertices and renumbers the rest in increasing order.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.components_avoiding(&[]).len() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of the graph after deleting `blocked`.
    pub fn components_avoiding(&self, blocked: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        for &b in blocked {
            seen[b] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = vec![s];
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Shortest path from `s` to `t` avoiding `blocked` (BFS, smallest ids
    /// first). Returns the vertex sequence including both ends.
    pub fn shortest_path_avoiding(
        &self,
        s: usize,
        t: usize,
        blocked: &[bool],
    ) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[v] {
                if prev[w] == usize::MAX && (w == t || !blocked[w]) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn distance(&self, s: usize, t: usize) -> Option<usize> {
        self.shortest_path_avoiding(s, t, &vec![false; self.n])
            .map(|p| p.len() - 1)
    }
}
