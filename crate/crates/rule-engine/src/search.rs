//! Backtracking over color assignments for the edges a reduction left
//! uncolored. Every color class is kept a disjoint union of paths; at the
//! leaves each class must be a single path, or one of the cycles it started
//! as.

use graph_core::Edge;

/// A group of edges that receives one color.
#[derive(Clone, Debug)]
pub(crate) struct Unit {
    pub edges: Vec<Edge>,
    /// A released piece of an existing color: it either keeps that color or
    /// moves to a new one.
    pub home: Option<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct Problem {
    pub n: usize,
    /// Total color slots; colors `first_new..colors` are new.
    pub colors: usize,
    pub first_new: usize,
    pub fixed: Vec<(Edge, usize)>,
    pub units: Vec<Unit>,
    pub node_budget: u64,
    pub max_accepts: usize,
}

#[derive(Debug)]
pub(crate) enum Outcome<T> {
    Found(T),
    Exhausted,
    OutOfBudget,
}

#[derive(Clone, Copy)]
enum Undo {
    Slot(usize, u8, u32),
    Pieces(usize, u32),
    Used(usize),
    Rem(usize),
}

struct State {
    n: usize,
    deg: Vec<u8>,
    partner: Vec<u32>,
    /// Open pieces per color.
    pieces: Vec<u32>,
    closed: Vec<bool>,
    used: Vec<u32>,
    /// Unassigned unit edges per vertex.
    rem: Vec<u32>,
    undo: Vec<Undo>,
}

impl State {
    fn slot(&self, c: usize, v: usize) -> usize {
        c * self.n + v
    }

    fn deg(&self, c: usize, v: usize) -> u8 {
        self.deg[self.slot(c, v)]
    }

    fn partner(&self, c: usize, v: usize) -> usize {
        self.partner[self.slot(c, v)] as usize
    }

    fn set(&mut self, c: usize, v: usize, d: u8, p: usize) {
        let i = self.slot(c, v);
        self.undo.push(Undo::Slot(i, self.deg[i], self.partner[i]));
        self.deg[i] = d;
        self.partner[i] = p as u32;
    }

    fn set_pieces(&mut self, c: usize, k: u32) {
        self.undo.push(Undo::Pieces(c, self.pieces[c]));
        self.pieces[c] = k;
    }

    fn can_add(&self, c: usize, x: usize, y: usize) -> bool {
        let (dx, dy) = (self.deg(c, x), self.deg(c, y));
        !self.closed[c] && dx < 2 && dy < 2 && !(dx == 1 && dy == 1 && self.partner(c, x) == y)
    }

    /// Adds `xy` to color `c` (which must pass `can_add`) and returns the
    /// ends of the piece it now belongs to.
    fn add(&mut self, c: usize, x: usize, y: usize) -> (usize, usize) {
        let (dx, dy) = (self.deg(c, x), self.deg(c, y));
        let ends = match (dx, dy) {
            (0, 0) => {
                self.set(c, x, 1, y);
                self.set(c, y, 1, x);
                let k = self.pieces[c] + 1;
                self.set_pieces(c, k);
                (x, y)
            }
            (1, 0) | (0, 1) => {
                let (a, b) = if dx == 1 { (x, y) } else { (y, x) };
                let o = self.partner(c, a);
                self.set(c, a, 2, 0);
                self.set(c, b, 1, o);
                self.set(c, o, 1, b);
                (o, b)
            }
            _ => {
                let (ox, oy) = (self.partner(c, x), self.partner(c, y));
                self.set(c, x, 2, 0);
                self.set(c, y, 2, 0);
                self.set(c, ox, 1, oy);
                self.set(c, oy, 1, ox);
                let k = self.pieces[c] - 1;
                self.set_pieces(c, k);
                (ox, oy)
            }
        };
        self.used[c] += 1;
        self.undo.push(Undo::Used(c));
        ends
    }

    /// Closes a piece into a cycle; only fixed edges may do this.
    fn close(&mut self, c: usize, x: usize, y: usize) {
        self.set(c, x, 2, 0);
        self.set(c, y, 2, 0);
        let k = self.pieces[c] - 1;
        self.set_pieces(c, k);
        self.closed[c] = true;
        self.used[c] += 1;
    }

    fn take_rem(&mut self, v: usize) {
        self.rem[v] -= 1;
        self.undo.push(Undo::Rem(v));
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            match self.undo.pop().unwrap() {
                Undo::Slot(i, d, p) => {
                    self.deg[i] = d;
                    self.partner[i] = p;
                }
                Undo::Pieces(c, k) => self.pieces[c] = k,
                Undo::Used(c) => self.used[c] -= 1,
                Undo::Rem(v) => self.rem[v] += 1,
            }
        }
    }

    /// A piece of a color with several pieces must still be able to grow.
    fn alive(&self, c: usize, (p, q): (usize, usize)) -> bool {
        self.pieces[c] < 2 || self.rem[p] > 0 || self.rem[q] > 0
    }

    /// Every open piece touching `v` can still grow or is alone.
    fn alive_at(&self, colors: usize, v: usize) -> bool {
        if self.rem[v] > 0 {
            return true;
        }
        (0..colors).all(|c| self.deg(c, v) != 1 || self.alive(c, (v, self.partner(c, v))))
    }

    fn complete(&self, colors: usize) -> bool {
        (0..colors).all(|c| if self.closed[c] { self.pieces[c] == 0 } else { self.pieces[c] <= 1 })
    }
}

struct Run<'a, T, F> {
    p: &'a Problem,
    st: State,
    /// Per unit, the existing colors with an end in its region of the
    /// uncolored edges. Only these can start a second piece there.
    reach: Vec<Vec<bool>>,
    /// Colors owning released pieces; they fill up from those pieces only.
    homes: Vec<bool>,
    choice: Vec<usize>,
    nodes: u64,
    accepts: usize,
    accept: F,
    found: Option<T>,
    out_of_budget: bool,
}

impl<T, F: FnMut(&[usize]) -> Option<T>> Run<'_, T, F> {
    fn candidates(&self, i: usize) -> Vec<usize> {
        let unit = &self.p.units[i];
        let st = &self.st;
        // Empty colors are interchangeable, whether new or emptied by release.
        let first_empty_new = (0..self.p.colors).find(|&c| st.used[c] == 0 && !st.closed[c] && !self.homes[c]);
        let mut out = Vec::new();
        if let Some(h) = unit.home {
            out.push(h);
            out.extend((self.p.first_new..self.p.colors).filter(|&c| st.used[c] > 0 && c != h));
            out.extend(first_empty_new);
            return out;
        }
        let (x, y) = unit.edges[0];
        let mut touching = Vec::new();
        let mut rest = Vec::new();
        for c in 0..self.p.colors {
            if st.used[c] == 0 || st.closed[c] {
                continue;
            }
            if st.deg(c, x) == 1 || st.deg(c, y) == 1 {
                touching.push(c);
            } else if c >= self.p.first_new || self.reach[i][c] {
                rest.push(c);
            }
        }
        // Joining two pieces of one color first, then plain extensions.
        touching.sort_by_key(|&c| std::cmp::Reverse((st.deg(c, x) == 1) as u8 + (st.deg(c, y) == 1) as u8));
        out.extend(touching);
        out.extend(first_empty_new);
        out.extend(rest);
        out
    }

    fn place(&mut self, i: usize, c: usize) -> bool {
        let unit = &self.p.units[i];
        for &(x, y) in &unit.edges {
            if !self.st.can_add(c, x, y) {
                return false;
            }
            let ends = self.st.add(c, x, y);
            self.st.take_rem(x);
            self.st.take_rem(y);
            if !self.st.alive(c, ends) {
                return false;
            }
            if !self.st.alive_at(self.p.colors, x) || !self.st.alive_at(self.p.colors, y) {
                return false;
            }
        }
        true
    }

    fn go(&mut self, i: usize) {
        if self.found.is_some() || self.out_of_budget {
            return;
        }
        if i == self.p.units.len() {
            if self.st.complete(self.p.colors) {
                self.accepts += 1;
                if let Some(t) = (self.accept)(&self.choice) {
                    self.found = Some(t);
                } else if self.accepts >= self.p.max_accepts {
                    self.out_of_budget = true;
                }
            }
            return;
        }
        for c in self.candidates(i) {
            self.nodes += 1;
            if self.nodes > self.p.node_budget {
                self.out_of_budget = true;
                return;
            }
            let mark = self.st.undo.len();
            if self.place(i, c) {
                self.choice[i] = c;
                self.go(i + 1);
            }
            self.st.rollback(mark);
            if self.found.is_some() || self.out_of_budget {
                return;
            }
        }
    }
}

/// Searches for an assignment of one color per unit. `accept` sees the
/// colors of the units in order and may reject a complete assignment, in
/// which case the search continues.
pub(crate) fn solve<T>(p: &Problem, accept: impl FnMut(&[usize]) -> Option<T>) -> (Outcome<T>, u64) {
    let mut st = State {
        n: p.n,
        deg: vec![0; p.colors * p.n],
        partner: vec![0; p.colors * p.n],
        pieces: vec![0; p.colors],
        closed: vec![false; p.colors],
        used: vec![0; p.colors],
        rem: vec![0; p.n],
        undo: Vec::new(),
    };
    for u in &p.units {
        for &(a, b) in &u.edges {
            st.rem[a] += 1;
            st.rem[b] += 1;
        }
    }
    for &((x, y), c) in &p.fixed {
        let (dx, dy) = (st.deg(c, x), st.deg(c, y));
        if st.closed[c] || dx == 2 || dy == 2 {
            return (Outcome::Exhausted, 0);
        }
        if dx == 1 && dy == 1 && st.partner(c, x) == y {
            st.close(c, x, y);
        } else {
            st.add(c, x, y);
        }
    }
    st.undo.clear();
    // A fixed piece with nowhere to grow dooms its color from the start.
    for c in 0..p.colors {
        if st.closed[c] && st.pieces[c] > 0 {
            return (Outcome::Exhausted, 0);
        }
        for v in 0..p.n {
            if st.deg(c, v) == 1 && !st.alive(c, (v, st.partner(c, v))) {
                return (Outcome::Exhausted, 0);
            }
        }
    }
    let mut root: Vec<usize> = (0..p.n).collect();
    fn find(root: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while root[r] != r {
            r = root[r];
        }
        root[x] = r;
        r
    }
    for u in &p.units {
        for &(a, b) in &u.edges {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            root[ra] = rb;
        }
    }
    let mut region = vec![vec![false; p.colors]; p.n];
    for v in 0..p.n {
        let r = find(&mut root, v);
        for (c, cell) in region[r].iter_mut().enumerate() {
            if st.deg(c, v) == 1 {
                *cell = true;
            }
        }
    }
    let reach = p
        .units
        .iter()
        .map(|u| region[find(&mut root, u.edges[0].0)].clone())
        .collect();
    let mut homes = vec![false; p.colors];
    for u in &p.units {
        if let Some(h) = u.home {
            homes[h] = true;
        }
    }
    let mut run = Run {
        p,
        st,
        reach,
        homes,
        choice: vec![usize::MAX; p.units.len()],
        nodes: 0,
        accepts: 0,
        accept,
        found: None,
        out_of_budget: false,
    };
    run.go(0);
    let outcome = match (run.found, run.out_of_budget) {
        (Some(t), _) => Outcome::Found(t),
        (None, true) => Outcome::OutOfBudget,
        (None, false) => Outcome::Exhausted,
    };
    (outcome, run.nodes)
}
