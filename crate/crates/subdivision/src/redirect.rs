//! The four redirection operations and the routing operation.

use graph_core::Graph;
use serde::Serialize;

use crate::problems::check_properties;
use crate::{Subdivision, SubdivisionError, MAX_REDIRECTIONS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Redirection {
    X1,
    X2,
    X3,
    X4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RedirectionStep {
    pub kind: Redirection,
    pub u1: usize,
    pub u2: usize,
    /// Index of the replaced path in the subdivision.
    pub path: usize,
    /// The new path, read from `u1`.
    pub new_path: Vec<usize>,
}

struct Ctx<'a> {
    g: &'a Graph,
    s: &'a Subdivision,
    on_s: Vec<bool>,
}

impl Ctx<'_> {
    fn rem(&self, u: usize) -> Vec<usize> {
        self.s.remaining_neighbors(self.g, u)
    }

    /// Exactly one common remaining neighbor v, plus the other remaining
    /// neighbors v1 of u1 and v2 of u2, both adjacent to v.
    fn one_common(&self, u1: usize, u2: usize) -> Option<(usize, usize, usize)> {
        let (r1, r2) = (self.rem(u1), self.rem(u2));
        if r1.len() != 2 || r2.len() != 2 {
            return None;
        }
        let common: Vec<usize> = r1.iter().copied().filter(|v| r2.contains(v)).collect();
        let [v] = common[..] else { return None };
        let v1 = *r1.iter().find(|&&x| x != v).unwrap();
        let v2 = *r2.iter().find(|&&x| x != v).unwrap();
        (self.g.has_edge(v1, v) && self.g.has_edge(v2, v)).then_some((v, v1, v2))
    }

    fn k4(&self, root: usize, a: usize, b: usize, c: usize) -> SubdivisionError {
        let mut others = [a, b, c];
        others.sort_unstable();
        SubdivisionError::InducedK4Violation { root, others }
    }

    fn ordered_pairs(&self) -> Vec<(usize, usize)> {
        let r = self.s.roots;
        let mut out = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    out.push((r[i], r[j]));
                }
            }
        }
        out
    }

    fn x1_x2(&self, want_x2: bool) -> Result<Option<RedirectionStep>, SubdivisionError> {
        for (u1, u2) in self.ordered_pairs() {
            let Some((v, v1, v2)) = self.one_common(u1, u2) else { continue };
            if self.on_s[v] || self.on_s[v1] || self.on_s[v2] {
                continue;
            }
            for p in self.s.paths_between(u1, u2) {
                let path = self.s.oriented(p, u1);
                if path.len() < 3 {
                    continue;
                }
                let w1 = path[1];
                let adjacent = self.g.has_edge(v1, w1);
                if !want_x2 && !adjacent {
                    return Ok(Some(RedirectionStep {
                        kind: Redirection::X1,
                        u1,
                        u2,
                        path: p,
                        new_path: vec![u1, v, u2],
                    }));
                }
                if want_x2 && adjacent {
                    if self.g.has_edge(v, w1) {
                        return Err(self.k4(u1, v, v1, w1));
                    }
                    return Ok(Some(RedirectionStep {
                        kind: Redirection::X2,
                        u1,
                        u2,
                        path: p,
                        new_path: vec![u1, v1, v, u2],
                    }));
                }
            }
        }
        Ok(None)
    }

    fn x3(&self) -> Result<Option<RedirectionStep>, SubdivisionError> {
        for (u1, u2) in self.ordered_pairs() {
            if self.s.link(u1, u2) == 0 {
                continue;
            }
            let Some((v, v1, v2)) = self.one_common(u1, u2) else { continue };
            if self.on_s[v] || self.on_s[v1] {
                continue;
            }
            for &u3 in &self.s.roots {
                if u3 == u1 || u3 == u2 {
                    continue;
                }
                for p in self.s.paths_between(u1, u3) {
                    let path = self.s.oriented(p, u1);
                    let Some(k) = path.iter().position(|&x| x == v2) else { continue };
                    if k == 0 || k + 1 >= path.len() {
                        continue;
                    }
                    let w1 = path[1];
                    let (wv, wv1) = (self.g.has_edge(w1, v), self.g.has_edge(w1, v1));
                    if wv && wv1 {
                        return Err(self.k4(u1, v, v1, w1));
                    }
                    let mut new_path = if !wv1 { vec![u1, v] } else { vec![u1, v1, v] };
                    new_path.extend_from_slice(&path[k..]);
                    return Ok(Some(RedirectionStep {
                        kind: Redirection::X3,
                        u1,
                        u2: u3,
                        path: p,
                        new_path,
                    }));
                }
            }
        }
        Ok(None)
    }

    fn x4(&self) -> Result<Option<RedirectionStep>, SubdivisionError> {
        for (u1, u2) in self.ordered_pairs() {
            let (mut r1, mut r2) = (self.rem(u1), self.rem(u2));
            r1.sort_unstable();
            r2.sort_unstable();
            if r1.len() != 2 || r1 != r2 {
                continue;
            }
            let (v, vp) = (r1[0], r1[1]);
            if !self.g.has_edge(v, vp) || self.on_s[v] || self.on_s[vp] {
                continue;
            }
            for p in self.s.paths_between(u1, u2) {
                let path = self.s.oriented(p, u1);
                if path.len() < 3 {
                    continue;
                }
                let w1 = path[1];
                let mid = if !self.g.has_edge(v, w1) {
                    vp
                } else if !self.g.has_edge(vp, w1) {
                    v
                } else {
                    return Err(self.k4(u1, v, vp, w1));
                };
                return Ok(Some(RedirectionStep {
                    kind: Redirection::X4,
                    u1,
                    u2,
                    path: p,
                    new_path: vec![u1, mid, u2],
                }));
            }
        }
        Ok(None)
    }
}

/// The first applicable redirection, trying X1, X2, X3, X4 in that order
/// and ordered root pairs lexicographically by position in `roots`.
pub fn find_redirection(
    g: &Graph,
    s: &Subdivision,
) -> Result<Option<RedirectionStep>, SubdivisionError> {
    let ctx = Ctx {
        g,
        s,
        on_s: s.on_s(g.n()),
    };
    if let Some(step) = ctx.x1_x2(false)? {
        return Ok(Some(step));
    }
    if let Some(step) = ctx.x1_x2(true)? {
        return Ok(Some(step));
    }
    if let Some(step) = ctx.x3()? {
        return Ok(Some(step));
    }
    ctx.x4()
}

fn apply(s: &Subdivision, step: &RedirectionStep) -> Subdivision {
    let mut out = s.clone();
    out.paths[step.path] = step.new_path.clone();
    out
}

/// Applies redirections until none matches. Returns the result and the
/// steps taken.
pub fn redirect(
    g: &Graph,
    s: &Subdivision,
) -> Result<(Subdivision, Vec<RedirectionStep>), SubdivisionError> {
    let props = check_properties(g, s);
    if !props.holds_a() || !props.holds_b() {
        return Err(SubdivisionError::Precondition(
            "redirection needs properties A and B".into(),
        ));
    }
    let mut cur = s.clone();
    let mut steps = Vec::new();
    while let Some(step) = find_redirection(g, &cur)? {
        if steps.len() == MAX_REDIRECTIONS {
            return Err(SubdivisionError::RedirectionLoop(steps.len()));
        }
        cur = apply(&cur, &step);
        steps.push(step);
    }
    Ok((cur, steps))
}

/// Routing at root `u`. The subdivision must already contain a path
/// starting `(u, v1, ...)` and `w` must be a former S-neighbor of `u` that
/// is no longer on S. With `v2` the other remaining neighbor of `u`, the
/// first edge of that path becomes `(u, v2, v1)` when `v2` is adjacent to
/// `w`; otherwise the path is left alone.
pub fn routing(
    g: &Graph,
    s: &Subdivision,
    u: usize,
    w: usize,
    v1: usize,
) -> Result<Subdivision, SubdivisionError> {
    let guard = |reason: &str| SubdivisionError::GuardFailure {
        root: u,
        reason: reason.to_string(),
    };
    let on_s = s.on_s(g.n());
    if on_s[w] || !g.has_edge(u, w) {
        return Err(guard("w must be a neighbor of u outside S"));
    }
    let p = (0..s.paths.len())
        .find(|&i| {
            let q = s.oriented(i, u);
            q[0] == u && q.len() > 1 && q[1] == v1
        })
        .ok_or_else(|| guard("no path of S starts with the edge u v1"))?;
    let rem = s.remaining_neighbors(g, u);
    let v2 = *rem
        .iter()
        .find(|&&x| x != w && g.has_edge(x, v1))
        .ok_or_else(|| guard("no remaining neighbor of u adjacent to v1"))?;
    let (a1, a2) = (g.has_edge(v1, w), g.has_edge(v2, w));
    if a1 && a2 {
        return Err(guard("both v1 and v2 are adjacent to w"));
    }
    if !a2 {
        return Ok(s.clone());
    }
    if on_s[v2] {
        return Err(guard("v2 lies on S"));
    }
    let mut out = s.clone();
    let mut path = s.oriented(p, u);
    path.insert(1, v2);
    out.paths[p] = path;
    Ok(out)
}
