use graph_core::{is_planar, Graph};

/// All labeled connected planar graphs on `n` vertices, by ascending edge
/// bitmask. Bit `i` of the mask stands for the `i`-th pair `(a, b)`, `a < b`,
/// in lexicographic order.
pub fn enumerate_connected_planar(n: usize) -> ConnectedPlanar {
    ConnectedPlanar::range(n, 0, 1u64 << (n * n.saturating_sub(1) / 2))
}

/// Iterator over a bitmask range, so a census can be split into chunks.
pub struct ConnectedPlanar {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedPlanar {
    pub fn range(n: usize, start: u64, end: u64) -> Self {
        assert!(n <= 8, "labeled enumeration is limited to small n");
        let pairs = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        ConnectedPlanar {
            n,
            pairs,
            next: start,
            end,
        }
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    fn connected(&self, mask: u64) -> bool {
        let mut adj = [0u16; 16];
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        let full: u16 = ((1u32 << self.n) - 1) as u16;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == full
    }

    pub fn graph_of(&self, mask: u64) -> Graph {
        Graph::from_edges_dedup(
            self.n,
            (0..self.pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.pairs[i]),
        )
    }
}

impl Iterator for ConnectedPlanar {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<(u64, Graph)> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.n >= 2 && (mask.count_ones() as usize) < self.n - 1 {
                continue;
            }
            if !self.connected(mask) {
                continue;
            }
            let g = self.graph_of(mask);
            if is_planar(&g) {
                return Some((mask, g));
            }
        }
        None
    }
}
