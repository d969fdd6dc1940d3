//! Backtracking over systems of internally disjoint paths.
//!
//! Slots are filled one at a time. Only induced paths are tried: any
//! solution can be shortened inside its own vertex sets into one made of
//! induced paths, so nothing is lost. The one exception is a second path
//! between the same two roots, which may ignore the edge joining them.
//! After each step the current path must still be able to reach its end and
//! every later slot must still be connectable. After each placed path every
//! root must also have enough disjoint routes left for its open slots.

use std::collections::VecDeque;

use graph_core::Graph;

use crate::SubdivisionError;

pub(crate) struct PathSystem<'g, F> {
    g: &'g Graph,
    slots: Vec<(usize, usize)>,
    is_root: Vec<bool>,
    used: Vec<bool>,
    chosen: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    accept: F,
}

impl<'g, F: FnMut(&[Vec<usize>]) -> bool> PathSystem<'g, F> {
    pub(crate) fn new(
        g: &'g Graph,
        roots: &[usize],
        slots: Vec<(usize, usize)>,
        budget: u64,
        accept: F,
    ) -> Self {
        let mut is_root = vec![false; g.n()];
        for &r in roots {
            is_root[r] = true;
        }
        PathSystem {
            g,
            slots,
            is_root,
            used: vec![false; g.n()],
            chosen: Vec::new(),
            nodes: 0,
            budget,
            accept,
        }
    }

    /// Runs until `accept` returns true (Ok(true)) or the space is exhausted
    /// (Ok(false)).
    pub(crate) fn run(&mut self) -> Result<bool, SubdivisionError> {
        if !self.feasible(0) {
            return Ok(false);
        }
        self.place(0)
    }

    fn place(&mut self, i: usize) -> Result<bool, SubdivisionError> {
        if i == self.slots.len() {
            return Ok((self.accept)(&self.chosen));
        }
        let (a, b) = self.slots[i];
        let direct_taken = self.chosen.iter().any(|p| {
            p.len() == 2 && ((p[0] == a && p[1] == b) || (p[0] == b && p[1] == a))
        });
        let dist = self.distances(b);
        let mut cur = vec![a];
        self.extend(i, &mut cur, b, !direct_taken, &dist)
    }

    fn extend(
        &mut self,
        i: usize,
        cur: &mut Vec<usize>,
        b: usize,
        allow_direct: bool,
        dist: &[usize],
    ) -> Result<bool, SubdivisionError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SubdivisionError::SearchBudgetExceeded(self.budget));
        }
        let x = *cur.last().unwrap();
        let at_start = cur.len() == 1;
        if self.g.has_edge(x, b) && (!at_start || allow_direct) {
            // Any other continuation would leave the chord xb behind.
            cur.push(b);
            let r = self.complete(i, cur);
            cur.pop();
            return r;
        }
        let mut next: Vec<usize> = self
            .g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| !self.is_root[y] && !self.used[y] && dist[y] != usize::MAX)
            .collect();
        next.sort_by_key(|&y| (dist[y], y));
        for y in next {
            if cur[..cur.len() - 1].iter().any(|&z| self.g.has_edge(y, z)) {
                continue;
            }
            cur.push(y);
            self.used[y] = true;
            if !self.reaches(cur, b) || !self.connectable(i + 1) {
                self.used[y] = false;
                cur.pop();
                continue;
            }
            let r = self.extend(i, cur, b, allow_direct, dist);
            self.used[y] = false;
            cur.pop();
            if r? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn complete(&mut self, i: usize, cur: &[usize]) -> Result<bool, SubdivisionError> {
        self.chosen.push(cur.to_vec());
        let r = if self.feasible(i + 1) {
            self.place(i + 1)
        } else {
            Ok(false)
        };
        self.chosen.pop();
        r
    }

    /// BFS distances to `b` through free non-root vertices.
    fn distances(&self, b: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.g.n()];
        dist[b] = 0;
        let mut q = VecDeque::from([b]);
        while let Some(v) = q.pop_front() {
            for &w in self.g.neighbors(v) {
                if dist[w] == usize::MAX && !self.is_root[w] && !self.used[w] {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Whether the path `cur` can still be finished at `b`: some route from
    /// its last vertex runs through free vertices with no neighbor among the
    /// earlier ones.
    fn reaches(&self, cur: &[usize], b: usize) -> bool {
        let (&y, before) = cur.split_last().expect("paths start at a root");
        let mut seen = vec![false; self.g.n()];
        for &z in before {
            seen[z] = true;
            for &w in self.g.neighbors(z) {
                seen[w] = true;
            }
        }
        seen[y] = true;
        let mut q = VecDeque::from([y]);
        while let Some(v) = q.pop_front() {
            for &w in self.g.neighbors(v) {
                if w == b {
                    return true;
                }
                if !seen[w] && !self.is_root[w] && !self.used[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
        false
    }

    /// Every slot from `from` on can still be joined on its own.
    fn connectable(&self, from: usize) -> bool {
        self.slots[from..].iter().all(|&(a, b)| {
            if self.g.has_edge(a, b) {
                return true;
            }
            let dist = self.distances(b);
            self.g.neighbors(a).iter().any(|&w| dist[w] != usize::MAX && !self.is_root[w])
        })
    }

    /// [`Self::connectable`], and each root can still route all its
    /// remaining slots at once.
    fn feasible(&self, from: usize) -> bool {
        if !self.connectable(from) {
            return false;
        }
        let rest = &self.slots[from..];
        let mut roots: Vec<usize> = rest.iter().flat_map(|&(a, b)| [a, b]).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.into_iter().all(|r| {
            let partners: Vec<usize> = rest
                .iter()
                .filter_map(|&(a, b)| if a == r { Some(b) } else if b == r { Some(a) } else { None })
                .collect();
            partners.len() < 2 || self.disjoint_routes(r, &partners) >= partners.len()
        })
    }

    /// Number of internally disjoint routes from `r` to the roots in
    /// `partners` through free vertices, a partner taking as many routes as
    /// it appears. A direct edge to a partner counts once.
    fn disjoint_routes(&self, r: usize, partners: &[usize]) -> usize {
        let n = self.g.n();
        // Vertex v enters at 2v and leaves at 2v + 1; the sink is 2n.
        let sink = 2 * n;
        let mut net = Network::new(2 * n + 1);
        for v in 0..n {
            if !self.is_root[v] && !self.used[v] {
                net.add(2 * v, 2 * v + 1, 1);
            }
        }
        for &(a, b) in self.g.edges() {
            net.add(2 * a + 1, 2 * b, 1);
            net.add(2 * b + 1, 2 * a, 1);
        }
        let mut want: Vec<(usize, usize)> = Vec::new();
        for &p in partners {
            match want.iter_mut().find(|(q, _)| *q == p) {
                Some(e) => e.1 += 1,
                None => want.push((p, 1)),
            }
        }
        for (p, k) in want {
            net.add(2 * p, sink, k as u32);
        }
        net.max_flow(2 * r + 1, sink, partners.len())
    }
}

/// Unit-ish capacity flow network for the routing bound, augmented by BFS.
struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn add(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Flow from `s` to `t`, stopping once `enough` is reached.
    fn max_flow(&mut self, s: usize, t: usize, enough: usize) -> usize {
        let mut flow = 0;
        while flow < enough {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                if v == t {
                    break;
                }
                for &e in &self.head[v] {
                    let w = self.to[e];
                    if self.cap[e] > 0 && !seen[w] {
                        seen[w] = true;
                        via[w] = e;
                        q.push_back(w);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
