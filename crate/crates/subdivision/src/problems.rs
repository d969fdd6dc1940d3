//! Patterns formed by the roots, settled roots, properties A/B/C and the
//! distant/close problem report.

use graph_core::Graph;
use serde::Serialize;

use crate::redirect::find_redirection;
use crate::{Kind, RedirectionStep, Subdivision};

/// Shape of a root's two remaining neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// Non-adjacent remaining neighbors.
    V,
    /// Adjacent remaining neighbors whose edge lies on a path of S.
    VPrime,
    /// Adjacent remaining neighbors otherwise.
    N,
    /// Two roots with the same non-adjacent pair.
    T2NA,
    /// Two roots with the same non-adjacent pair, touching a path of S
    /// incident with one of them.
    U,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPattern {
    pub root: usize,
    pub remaining: Vec<usize>,
    /// `None` unless the root has exactly two remaining neighbors.
    pub pattern: Option<Pattern>,
    /// The other root of a T2NA or U pattern.
    pub partner: Option<usize>,
    pub settled: bool,
    pub lone_settled: bool,
}

#[allow(clippy::needless_range_loop)]
pub fn root_patterns(g: &Graph, s: &Subdivision) -> Vec<RootPattern> {
    let on_s = s.on_s(g.n());
    let rem: Vec<Vec<usize>> = s.roots.iter().map(|&u| s.remaining_neighbors(g, u)).collect();
    let same_pair = |i: usize, j: usize| {
        rem[i].len() == 2 && rem[j].len() == 2 && {
            let (mut a, mut b) = (rem[i].clone(), rem[j].clone());
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
    };
    let touches_incident = |i: usize, j: usize| {
        rem[i].iter().any(|&v| {
            s.path_through(v)
                .is_some_and(|p| s.incident(p, s.roots[i]) || s.incident(p, s.roots[j]))
        })
    };
    let mut out: Vec<RootPattern> = Vec::new();
    for i in 0..4 {
        let mut pattern = None;
        let mut partner = None;
        if let [a, b] = rem[i][..] {
            if g.has_edge(a, b) {
                pattern = Some(if on_s[a] && on_s[b] && s.has_edge(a, b) {
                    Pattern::VPrime
                } else {
                    Pattern::N
                });
            } else if let Some(j) = (0..4).find(|&j| j != i && same_pair(i, j)) {
                partner = Some(s.roots[j]);
                pattern = Some(if touches_incident(i, j) {
                    Pattern::U
                } else {
                    Pattern::T2NA
                });
            } else {
                pattern = Some(Pattern::V);
            }
        }
        out.push(RootPattern {
            root: s.roots[i],
            remaining: rem[i].clone(),
            pattern,
            partner,
            settled: false,
            lone_settled: false,
        });
    }
    let shared = |i: usize, j: usize| rem[i].iter().filter(|v| rem[j].contains(v)).count();
    let disjoint_from_others = |i: usize, skip: usize| {
        rem[i].iter().all(|&v| !on_s[v])
            && (0..4).all(|j| j == i || j == skip || shared(i, j) == 0)
    };
    let u_pairs: Vec<usize> = (0..4).filter(|&j| out[j].pattern == Some(Pattern::U)).collect();
    for i in 0..4 {
        let lone = match out[i].pattern {
            None => rem[i].len() < 2,
            Some(Pattern::V) | Some(Pattern::VPrime) => {
                (0..4).all(|j| j == i || shared(i, j) <= 1)
                    && !u_pairs.iter().any(|&j| same_pair(i, j))
            }
            Some(Pattern::N) => disjoint_from_others(i, i),
            _ => false,
        };
        let t2na = out[i].pattern == Some(Pattern::T2NA) && {
            let j = s.roots.iter().position(|&r| Some(r) == out[i].partner).unwrap();
            disjoint_from_others(i, j)
        };
        out[i].lone_settled = lone;
        out[i].settled = lone || t2na;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PropertyWitness {
    /// A chord on a path incident with an unsettled or V′ root.
    AChord { root: usize, path: usize, chord: (usize, usize) },
    /// A chord between the two remaining neighbors of a root, on a path not
    /// incident with it.
    BChord { root: usize, path: usize, chord: (usize, usize) },
    Redirection(RedirectionStep),
    /// A redirection guard tripped while looking for one.
    Guard(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub a: Option<PropertyWitness>,
    pub b: Option<PropertyWitness>,
    pub c: Option<PropertyWitness>,
}

impl Properties {
    pub fn holds_a(&self) -> bool {
        self.a.is_none()
    }
    pub fn holds_b(&self) -> bool {
        self.b.is_none()
    }
    pub fn holds_c(&self) -> bool {
        self.c.is_none()
    }
    pub fn strong(&self) -> bool {
        self.a.is_none() && self.b.is_none() && self.c.is_none()
    }
}

/// Chords of path `i` (pairs of positions' vertices), skipping a root pair
/// that is already a one-edge path of S.
pub(crate) fn chords(g: &Graph, s: &Subdivision, i: usize) -> Vec<(usize, usize)> {
    let p = &s.paths[i];
    let mut out = Vec::new();
    for a in 0..p.len() {
        for b in a + 2..p.len() {
            let (x, y) = (p[a], p[b]);
            if !g.has_edge(x, y) {
                continue;
            }
            let exempt = s.is_root(x)
                && s.is_root(y)
                && (0..s.paths.len()).any(|j| {
                    j != i && s.paths[j].len() == 2 && s.paths_between(x, y).contains(&j)
                });
            if !exempt {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn check_properties(g: &Graph, s: &Subdivision) -> Properties {
    let pats = root_patterns(g, s);
    let mut a = None;
    let mut b = None;
    'roots: for rp in &pats {
        let u = rp.root;
        if !rp.settled || rp.pattern == Some(Pattern::VPrime) {
            for i in 0..s.paths.len() {
                if s.incident(i, u) {
                    if let Some(&chord) = chords(g, s, i).first() {
                        a = Some(PropertyWitness::AChord { root: u, path: i, chord });
                        break 'roots;
                    }
                }
            }
        }
    }
    'b: for rp in &pats {
        if let [x, y] = rp.remaining[..] {
            for i in 0..s.paths.len() {
                if s.incident(i, rp.root) {
                    continue;
                }
                let hit = chords(g, s, i)
                    .into_iter()
                    .find(|&(p, q)| (p == x && q == y) || (p == y && q == x));
                if let Some(chord) = hit {
                    b = Some(PropertyWitness::BChord { root: rp.root, path: i, chord });
                    break 'b;
                }
            }
        }
    }
    let c = match find_redirection(g, s) {
        Ok(None) => None,
        Ok(Some(step)) => Some(PropertyWitness::Redirection(step)),
        Err(e) => Some(PropertyWitness::Guard(e.to_string())),
    };
    Properties { a, b, c }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistantProblem {
    pub root: usize,
    pub path: usize,
    pub pair: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProblemReport {
    pub distant: Vec<DistantProblem>,
    /// Groups of unsettled roots linked by shared remaining neighbors.
    pub close: Vec<Vec<usize>>,
    pub settled: Vec<usize>,
    pub patterns: Vec<RootPattern>,
    /// Statements the theory guarantees but that failed on this instance.
    pub broken_claims: Vec<String>,
}

impl ProblemReport {
    pub fn roots_with_distant(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.distant.iter().map(|d| d.root).collect();
        r.sort_unstable();
        r.dedup();
        r
    }
}

pub fn classify_problems(g: &Graph, s: &Subdivision) -> ProblemReport {
    let pats = root_patterns(g, s);
    let settled_root = |v: usize| pats.iter().any(|p| p.root == v && p.settled);
    let mut distant = Vec::new();
    for rp in &pats {
        let [v, w] = rp.remaining[..] else { continue };
        if !g.has_edge(v, w) || s.is_root(v) || s.is_root(w) {
            continue;
        }
        let others_ok = pats.iter().all(|q| {
            q.root == rp.root
                || !(q.remaining.contains(&v) || q.remaining.contains(&w))
                || settled_root(q.root)
        });
        if !others_ok {
            continue;
        }
        for i in 0..s.paths.len() {
            if s.incident(i, rp.root) {
                continue;
            }
            let on = s.paths[i].iter().filter(|&&x| x == v || x == w).count();
            if on == 1 {
                distant.push(DistantProblem {
                    root: rp.root,
                    path: i,
                    pair: (v.min(w), v.max(w)),
                });
            }
        }
    }

    let unsettled: Vec<usize> = (0..4).filter(|&i| !pats[i].settled).collect();
    let mut group: Vec<usize> = (0..4).collect();
    fn find(group: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while group[r] != r {
            r = group[r];
        }
        group[x] = r;
        r
    }
    let shares = |i: usize, j: usize| pats[i].remaining.iter().any(|v| pats[j].remaining.contains(v));
    for &i in &unsettled {
        for &j in &unsettled {
            if i < j && shares(i, j) {
                let (a, b) = (find(&mut group, i), find(&mut group, j));
                group[a.max(b)] = a.min(b);
            }
        }
    }
    let mut close: Vec<Vec<usize>> = Vec::new();
    for &i in &unsettled {
        let members: Vec<usize> = unsettled
            .iter()
            .copied()
            .filter(|&j| find(&mut group, j) == find(&mut group, i))
            .map(|j| pats[j].root)
            .collect();
        if members.len() >= 2 && !close.contains(&members) {
            close.push(members);
        }
    }

    let mut broken = Vec::new();
    for (i, pat) in pats.iter().enumerate() {
        let alone = (0..4).all(|j| j == i || !shares(i, j));
        let has_distant = distant.iter().any(|d| d.root == pat.root);
        if alone && !has_distant && !pat.lone_settled {
            broken.push(format!(
                "root {} shares no remaining neighbor but is neither distant nor lone-settled",
                pat.root
            ));
        }
    }
    if s.kind == Kind::C4Plus {
        let on_s = s.on_s(g.n());
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = (s.roots[i], s.roots[j]);
                if s.link(a, b) == 1
                    && pats[i].remaining.iter().any(|&v| on_s[v])
                    && pats[j].remaining.iter().any(|&v| on_s[v])
                {
                    broken.push(format!(
                        "1-linked roots {a} and {b} both have a remaining neighbor on S"
                    ));
                }
            }
        }
    }
    ProblemReport {
        distant,
        close,
        settled: pats.iter().filter(|p| p.settled).map(|p| p.root).collect(),
        patterns: pats,
        broken_claims: broken,
    }
}
