//! Branch and bound over vertex transitions.
//!
//! A path decomposition is fixed by saying, at every vertex, which pairs of
//! incident edges are consecutive on a common path ("transitions"); the
//! edges left unpaired at a vertex are path ends there. The search visits
//! vertices one by one and picks a partial matching of the incident edges.
//! Edges joined by transitions form chains, tracked in a union-find with one
//! vertex bitset per chain. Two chains may be joined at `v` only when their
//! vertex sets meet exactly in `v`, which rules out cycles and repeated
//! vertices as soon as they would appear.
//!
//! Bound: the ends fixed so far plus a lower bound on the ends at every
//! unvisited vertex must stay within `2k`. At an unvisited vertex, a stub
//! whose chain cannot be joined to any other stub there is a forced end; the
//! remaining stubs add their parity. Only the two far ends of a merged chain
//! change their bound, so it is maintained incrementally. Matchings with
//! fewer ends are tried first.
//!
//! At most `k` paths pass through a vertex, so at most `2k - d(v)` of them
//! end there.
//!
//! Capacity: a chain with both ends fixed is a finished path. The other
//! `k - closed` paths have at most `n - 1` edges each and must hold every
//! edge outside the finished ones.

use graph_core::Graph;

pub(crate) enum Outcome {
    Found(Vec<usize>),
    Infeasible,
    Timeout,
}

/// Largest vertex count the bitset representation supports.
pub(crate) const MAX_N: usize = 128;

pub(crate) struct Search<'g> {
    g: &'g Graph,
    k2: u32,
    order: Vec<usize>,
    parent: Vec<u32>,
    rank: Vec<u8>,
    vset: Vec<u128>,
    uf_undo: Vec<(u32, u32, u8, u128, [u32; 2], u8)>,
    chain_ends: Vec<[u32; 2]>,
    visited: Vec<bool>,
    lb: Vec<u32>,
    lb_left: u32,
    lb_undo: Vec<(u32, u32)>,
    ends: u32,
    ends_here: u32,
    end_cap: u32,
    fin: Vec<u8>,
    closed: u32,
    closed_len: u32,
    partner: Vec<[u32; 2]>,
    pub nodes: u64,
    budget: u64,
}

const NONE: u32 = u32::MAX;

fn vertex_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut touch = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (touch[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            touch[w] += 1;
        }
    }
    order
}

impl<'g> Search<'g> {
    pub(crate) fn new(g: &'g Graph, k: usize, budget: u64) -> Self {
        assert!(g.n() <= MAX_N);
        let m = g.m();
        let vset = g
            .edges()
            .iter()
            .map(|&(a, b)| (1u128 << a) | (1u128 << b))
            .collect();
        let lb: Vec<u32> = (0..g.n()).map(|v| (g.degree(v) % 2) as u32).collect();
        Search {
            g,
            k2: 2 * k as u32,
            order: vertex_order(g),
            parent: (0..m as u32).collect(),
            rank: vec![0; m],
            vset,
            uf_undo: Vec::new(),
            chain_ends: g.edges().iter().map(|&(a, b)| [a as u32, b as u32]).collect(),
            visited: vec![false; g.n()],
            lb_left: lb.iter().sum(),
            lb,
            lb_undo: Vec::new(),
            ends: 0,
            ends_here: 0,
            end_cap: 0,
            fin: vec![0; m],
            closed: 0,
            closed_len: 0,
            partner: vec![[NONE; 2]; m],
            nodes: 0,
            budget,
        }
    }

    pub(crate) fn run(&mut self) -> Outcome {
        if self.lb_left > self.k2 {
            return Outcome::Infeasible;
        }
        match self.visit(0) {
            Some(true) => Outcome::Found(self.colors()),
            Some(false) => Outcome::Infeasible,
            None => Outcome::Timeout,
        }
    }

    fn find(&self, mut e: u32) -> u32 {
        while self.parent[e as usize] != e {
            e = self.parent[e as usize];
        }
        e
    }

    /// Joins the chains of `a` and `b` at `v`. Returns the undo mark for
    /// the bound updates.
    fn union(&mut self, a: u32, b: u32, v: usize) -> usize {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        let far = |ends: [u32; 2]| if ends[0] == v as u32 { ends[1] } else { ends[0] };
        let (x, y) = (far(self.chain_ends[ra as usize]), far(self.chain_ends[rb as usize]));
        if self.rank[ra as usize] < self.rank[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.uf_undo.push((
            rb,
            ra,
            self.rank[ra as usize],
            self.vset[ra as usize],
            self.chain_ends[ra as usize],
            self.fin[ra as usize],
        ));
        self.fin[ra as usize] += self.fin[rb as usize];
        self.parent[rb as usize] = ra;
        if self.rank[ra as usize] == self.rank[rb as usize] {
            self.rank[ra as usize] += 1;
        }
        self.vset[ra as usize] |= self.vset[rb as usize];
        self.chain_ends[ra as usize] = [x, y];
        let mark = self.lb_undo.len();
        for w in [x as usize, y as usize] {
            if !self.visited[w] {
                let new = self.forced_ends(w);
                self.lb_undo.push((w as u32, self.lb[w]));
                self.lb_left = self.lb_left - self.lb[w] + new;
                self.lb[w] = new;
            }
        }
        mark
    }

    fn undo_union(&mut self, mark: usize) {
        while self.lb_undo.len() > mark {
            let (w, old) = self.lb_undo.pop().unwrap();
            self.lb_left = self.lb_left - self.lb[w as usize] + old;
            self.lb[w as usize] = old;
        }
        let (rb, ra, rank, vset, ends, fin) = self.uf_undo.pop().unwrap();
        self.fin[ra as usize] = fin;
        self.parent[rb as usize] = rb;
        self.rank[ra as usize] = rank;
        self.vset[ra as usize] = vset;
        self.chain_ends[ra as usize] = ends;
    }

    /// Lower bound on the number of paths ending at the unvisited vertex `u`.
    fn forced_ends(&self, u: usize) -> u32 {
        let ubit = 1u128 << u;
        let roots: Vec<u32> = self
            .g
            .neighbors(u)
            .iter()
            .map(|&w| self.find(self.g.edge_index(u, w).unwrap() as u32))
            .collect();
        let d = roots.len() as u32;
        let isolated = (0..roots.len())
            .filter(|&i| {
                !(0..roots.len()).any(|j| {
                    j != i
                        && roots[i] != roots[j]
                        && self.vset[roots[i] as usize] & self.vset[roots[j] as usize] == ubit
                })
            })
            .count() as u32;
        isolated + (d - isolated) % 2
    }

    fn set_partner(&mut self, e: usize, v: usize, f: u32) {
        let side = (self.g.edges()[e].0 != v) as usize;
        self.partner[e][side] = f;
    }

    fn visit(&mut self, idx: usize) -> Option<bool> {
        if idx == self.order.len() {
            return Some(true);
        }
        let v = self.order[idx];
        let stubs: Vec<u32> = self
            .g
            .neighbors(v)
            .iter()
            .map(|&w| self.g.edge_index(v, w).unwrap() as u32)
            .collect();
        let own = self.lb[v];
        let saved = (self.end_cap, self.ends_here);
        self.end_cap = self.k2.saturating_sub(stubs.len() as u32);
        self.ends_here = 0;
        self.lb_left -= own;
        self.visited[v] = true;
        let mut decided = vec![false; stubs.len()];
        let r = self.pair(v, idx, &stubs, &mut decided, 0);
        if r == Some(false) {
            self.visited[v] = false;
            self.lb_left += own;
            (self.end_cap, self.ends_here) = saved;
        }
        r
    }

    /// Chooses the fate of the stubs at `v` from position `i` on.
    fn pair(
        &mut self,
        v: usize,
        idx: usize,
        stubs: &[u32],
        decided: &mut [bool],
        i: usize,
    ) -> Option<bool> {
        let Some(i) = (i..stubs.len()).find(|&j| !decided[j]) else {
            return self.visit(idx + 1);
        };
        let open = decided.iter().filter(|&&d| !d).count() as u32;
        if self.ends + (open % 2) + self.lb_left > self.k2 {
            return Some(false);
        }
        decided[i] = true;
        let vbit = 1u128 << v;
        let ri = self.find(stubs[i]);
        for j in i + 1..stubs.len() {
            if decided[j] {
                continue;
            }
            let rj = self.find(stubs[j]);
            if ri == rj || self.vset[ri as usize] & self.vset[rj as usize] != vbit {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                decided[i] = false;
                return None;
            }
            decided[j] = true;
            let mark = self.union(stubs[i], stubs[j], v);
            self.set_partner(stubs[i] as usize, v, stubs[j]);
            self.set_partner(stubs[j] as usize, v, stubs[i]);
            let r = self.pair(v, idx, stubs, decided, i + 1);
            if r != Some(false) {
                // Keep the transitions of a solution in place for `colors`.
                return r;
            }
            self.set_partner(stubs[i] as usize, v, NONE);
            self.set_partner(stubs[j] as usize, v, NONE);
            self.undo_union(mark);
            decided[j] = false;
        }
        // Leave stub i as a path end at v.
        let mut r = Some(false);
        if self.ends_here < self.end_cap
            && self.ends + 1 + ((open - 1) % 2) + self.lb_left <= self.k2
        {
            self.nodes += 1;
            if self.nodes > self.budget {
                decided[i] = false;
                return None;
            }
            let root = self.find(stubs[i]) as usize;
            self.fin[root] += 1;
            let closes = self.fin[root] == 2;
            let len = self.vset[root].count_ones() - 1;
            if closes {
                self.closed += 1;
                self.closed_len += len;
            }
            let n1 = self.g.n() as u32 - 1;
            let room = (self.k2 / 2).saturating_sub(self.closed) * n1;
            if self.closed <= self.k2 / 2 && room + self.closed_len >= self.g.m() as u32 {
                self.ends += 1;
                self.ends_here += 1;
                r = self.pair(v, idx, stubs, decided, i + 1);
                if r != Some(false) {
                    return r;
                }
                self.ends_here -= 1;
                self.ends -= 1;
            }
            if closes {
                self.closed -= 1;
                self.closed_len -= len;
            }
            self.fin[root] -= 1;
        }
        decided[i] = false;
        r
    }

    /// Follows the transitions to number the paths.
    fn colors(&self) -> Vec<usize> {
        let m = self.g.m();
        let mut color = vec![usize::MAX; m];
        let mut next = 0;
        for start in 0..m {
            if color[start] != usize::MAX || (self.partner[start][0] != NONE && self.partner[start][1] != NONE) {
                continue;
            }
            let mut prev = NONE;
            let mut e = start as u32;
            loop {
                color[e as usize] = next;
                let [p, q] = self.partner[e as usize];
                let step = if p != NONE && p != prev { p } else if q != NONE && q != prev { q } else { NONE };
                if step == NONE {
                    break;
                }
                prev = e;
                e = step;
            }
            next += 1;
        }
        debug_assert!(color.iter().all(|&c| c != usize::MAX));
        color
    }
}
