use graph_core::Graph;
use serde::Serialize;

use crate::{Kind, Subdivision};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

/// Independent check of every structural invariant, including the star
/// conditions when `s.star` is set.
pub fn validate_subdivision(g: &Graph, s: &Subdivision) -> SubdivisionReport {
    let mut v = Vec::new();
    let n = g.n();
    let mut roots = s.roots.to_vec();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() != 4 || roots.iter().any(|&r| r >= n) {
        v.push(format!("roots {:?} are not four distinct vertices", s.roots));
        return SubdivisionReport { ok: false, violations: v };
    }
    if s.paths.len() != 6 {
        v.push(format!("{} paths instead of 6", s.paths.len()));
    }
    let mut owner = vec![usize::MAX; n];
    for (i, p) in s.paths.iter().enumerate() {
        if p.len() < 2 {
            v.push(format!("path {i} has no edge"));
            continue;
        }
        if p.iter().any(|&x| x >= n) {
            v.push(format!("path {i} leaves the vertex range"));
            continue;
        }
        let (a, b) = (p[0], p[p.len() - 1]);
        if !s.is_root(a) || !s.is_root(b) || a == b {
            v.push(format!("path {i} does not join two roots"));
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                v.push(format!("path {i} uses the non-edge {} {}", w[0], w[1]));
            }
        }
        let mut seen = p.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != p.len() {
            v.push(format!("path {i} repeats a vertex"));
        }
        for &x in &p[1..p.len() - 1] {
            if s.is_root(x) {
                v.push(format!("path {i} passes through root {x}"));
                continue;
            }
            if owner[x] == usize::MAX {
                owner[x] = i;
                continue;
            }
            let allowed = s.kind == Kind::SemiC4Plus
                && s.contact.is_some_and(|c| {
                    c.vertex == x
                        && ((c.paths == (owner[x], i)) || (c.paths == (i, owner[x])))
                });
            if !allowed {
                v.push(format!("paths {} and {i} share the internal vertex {x}", owner[x]));
            }
        }
    }
    if s.kind == Kind::SemiC4Plus {
        match s.contact {
            None => v.push("semi-C4+ without a contact vertex".into()),
            Some(c) => {
                let on = |i: usize| s.paths.get(i).is_some_and(|p| p[1..p.len() - 1].contains(&c.vertex));
                if !on(c.paths.0) || !on(c.paths.1) {
                    v.push(format!("contact vertex {} is not on both designated paths", c.vertex));
                }
            }
        }
    }
    v.extend(pattern_violations(s));
    if s.star {
        if s.kind != Kind::C4Plus {
            v.push("only a C4+ can be marked star".into());
        } else {
            v.extend(star_violations(g, s));
        }
    }
    SubdivisionReport {
        ok: v.is_empty(),
        violations: v,
    }
}

fn pattern_violations(s: &Subdivision) -> Vec<String> {
    let r = s.roots;
    let pairs = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
    let link: Vec<usize> = pairs.iter().map(|&(i, j)| s.link(r[i], r[j])).collect();
    match s.kind {
        Kind::K4 => {
            if link.iter().all(|&l| l == 1) {
                Vec::new()
            } else {
                vec![format!("K4 pattern needs one path per root pair, links {link:?}")]
            }
        }
        Kind::C4Plus | Kind::SemiC4Plus => {
            // Each perfect matching of the roots must be uniformly 0-, 1- or
            // 2-linked, using each value once.
            let per: Vec<Option<usize>> = (0..3)
                .map(|m| (link[2 * m] == link[2 * m + 1]).then_some(link[2 * m]))
                .collect();
            let mut vals: Vec<usize> = per.iter().flatten().copied().collect();
            vals.sort_unstable();
            if vals == [0, 1, 2] {
                Vec::new()
            } else {
                vec![format!("C4+ pattern needs links 2,2 / 1,1 / 0,0, links {link:?}")]
            }
        }
    }
}

/// Violations of the three star conditions of a C4+.
pub fn star_violations(g: &Graph, s: &Subdivision) -> Vec<String> {
    let mut v = Vec::new();
    let rem: Vec<Vec<usize>> = s.roots.iter().map(|&u| s.remaining_neighbors(g, u)).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (s.roots[i], s.roots[j]);
            let common: Vec<usize> = rem[i].iter().copied().filter(|x| rem[j].contains(x)).collect();
            match s.link(a, b) {
                0 if !common.is_empty() => {
                    v.push(format!("0-linked roots {a},{b} share remaining neighbors {common:?}"))
                }
                2 if common.len() > 1 => {
                    v.push(format!("2-linked roots {a},{b} share {common:?}"))
                }
                2 if common.len() == 1 => {
                    let x = common[0];
                    let fine = (0..s.paths.len()).any(|p| {
                        !s.incident(p, a)
                            && !s.incident(p, b)
                            && s.link(s.ends(p).0, s.ends(p).1) == 2
                            && s.paths[p].contains(&x)
                    });
                    if !fine {
                        v.push(format!(
                            "2-linked roots {a},{b} share {x} outside the opposite parallel paths"
                        ));
                    }
                }
                _ => {}
            }
        }
    }
    for p in 0..s.paths.len() {
        let (a, b) = s.ends(p);
        if s.link(a, b) != 1 {
            continue;
        }
        let path = &s.paths[p];
        for &x in &path[1..path.len() - 1] {
            for (k, &u) in s.roots.iter().enumerate() {
                if u != a && u != b && rem[k].contains(&x) {
                    v.push(format!("solo path {a}-{b} carries {x}, a remaining neighbor of {u}"));
                }
            }
        }
    }
    v
}
