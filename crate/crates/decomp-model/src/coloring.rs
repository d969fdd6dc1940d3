use std::collections::BTreeMap;

use graph_core::{edge, Edge, Graph};

use crate::ModelError;

/// A total map from an edge set to color ids `0..k`.
///
/// The edge domain is stored explicitly (sorted), so a coloring can describe
/// intermediate edge sets that are not yet a [`Graph`], such as the result of
/// a deviation. It "colors" a graph when its domain equals `E(g)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    edges: Vec<Edge>,
    colors: Vec<usize>,
    k: usize,
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.classes()).finish()
    }
}

impl EdgeColoring {
    /// Color `i` is the `i`-th class. Empty classes are dropped and the ids
    /// of later classes shift down.
    pub fn from_classes<C>(classes: C) -> Result<EdgeColoring, ModelError>
    where
        C: IntoIterator,
        C::Item: IntoIterator<Item = Edge>,
    {
        let mut pairs = Vec::new();
        let mut k = 0;
        for class in classes {
            let before = pairs.len();
            pairs.extend(class.into_iter().map(|(a, b)| (edge(a, b), k)));
            if pairs.len() > before {
                k += 1;
            }
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(ModelError::EdgeColoredTwice(w[0].0));
        }
        let (edges, colors) = pairs.into_iter().unzip();
        Ok(EdgeColoring { edges, colors, k })
    }

    /// Classes given as vertex sequences (paths, or closed walks for cycles).
    pub fn from_vertex_sequences(seqs: &[Vec<usize>]) -> Result<EdgeColoring, ModelError> {
        Self::from_classes(seqs.iter().map(|s| s.windows(2).map(|w| edge(w[0], w[1]))))
    }

    /// Colors `g` with an explicit color per edge (indexed like `g.edges()`).
    /// Ids are compacted, keeping their relative order.
    pub fn for_graph(g: &Graph, colors: Vec<usize>) -> EdgeColoring {
        assert_eq!(colors.len(), g.m());
        let mut c = EdgeColoring {
            edges: g.edges().to_vec(),
            colors,
            k: 0,
        };
        c.compact();
        c
    }

    fn compact(&mut self) {
        let mut used: Vec<usize> = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        for c in &mut self.colors {
            *c = used.binary_search(c).unwrap();
        }
        self.k = used.len();
    }

    #[inline]
    pub fn num_colors(&self) -> usize {
        self.k
    }

    /// The colored edge set, sorted.
    #[inline]
    pub fn domain(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors_by_edge(&self) -> &[usize] {
        &self.colors
    }

    pub fn covers(&self, g: &Graph) -> bool {
        self.edges == g.edges()
    }

    pub fn color_of(&self, a: usize, b: usize) -> Option<usize> {
        self.edges
            .binary_search(&edge(a, b))
            .ok()
            .map(|i| self.colors[i])
    }

    pub fn class(&self, color: usize) -> Vec<Edge> {
        self.edges
            .iter()
            .zip(&self.colors)
            .filter(|&(_, &c)| c == color)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.k];
        for (&e, &c) in self.edges.iter().zip(&self.colors) {
            out[c].push(e);
        }
        out
    }

    /// Replaces the whole class list (same semantics as `from_classes`).
    pub fn with_classes(classes: Vec<Vec<Edge>>) -> Result<EdgeColoring, ModelError> {
        Self::from_classes(classes)
    }

    /// Translates every vertex through `map` (e.g. from a subgraph's ids back
    /// to the host graph's ids).
    pub fn relabeled(&self, map: &[usize]) -> EdgeColoring {
        let classes = self
            .classes()
            .into_iter()
            .map(|cl| cl.into_iter().map(|(a, b)| edge(map[a], map[b])));
        Self::from_classes(classes).expect("relabeling with an injective map")
    }

    /// Disjoint union: the classes of `self` followed by those of `other`.
    pub fn union(&self, other: &EdgeColoring) -> Result<EdgeColoring, ModelError> {
        Self::from_classes(self.classes().into_iter().chain(other.classes()))
    }

    /// Number of edges per color.
    pub fn class_sizes(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &c in &self.colors {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }
}
