//! The case analysis that sends a pair of vertices of degree at most 4 to a
//! rule of the catalog.

use graph_core::Graph;

use crate::catalog::{catalog, check_matcher, Binding, EditTemplate};
use crate::{Edit, MatchContext, RuleError, RuleMatch};

struct Walk<'g> {
    g: &'g Graph,
    transcript: Vec<String>,
}

impl Walk<'_> {
    fn note(&mut self, s: impl Into<String>) {
        self.transcript.push(s.into());
    }

    fn fail(mut self, why: &str) -> RuleError {
        self.note(format!("unmatched: {why}"));
        RuleError::UnmatchedCase(self.transcript)
    }

    fn odd(&self, v: usize) -> bool {
        self.g.degree(v) % 2 == 1
    }
}

fn bind(pairs: &[(&str, usize)]) -> Binding {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Walks the case tree for the pair `(u1, u2)` and returns the first leaf it
/// reaches, with the binding checked against the catalog matcher.
pub fn match_ci_rule(g: &Graph, u1: usize, u2: usize) -> Result<RuleMatch, RuleError> {
    let mut w = Walk {
        g,
        transcript: Vec::new(),
    };
    if u1 == u2 || u1 >= g.n() || u2 >= g.n() {
        return Err(w.fail("the pair must be two distinct vertices"));
    }
    if g.degree(u1) > 4 || g.degree(u2) > 4 || g.degree(u1) == 0 || g.degree(u2) == 0 {
        return Err(w.fail("both vertices need degree 1 to 4"));
    }
    let Some(path) = g.shortest_path_avoiding(u1, u2, &vec![false; g.n()]) else {
        return Err(w.fail("no path between the pair"));
    };
    let len = path.len() - 1;
    w.note(format!("P = {path:?}, length {len}"));
    let (p1, p2) = (path[1], path[len - 1]);
    let rem = |u: usize, skip: usize| -> Vec<usize> {
        g.neighbors(u).iter().copied().filter(|&x| x != skip).collect()
    };
    let (r1, r2) = (rem(u1, p1), rem(u2, p2));
    let commons: Vec<usize> = r1.iter().copied().filter(|x| r2.contains(x)).collect();
    w.note(format!("remaining {r1:?} / {r2:?}, commons {commons:?}"));
    let adjacent = len == 1;
    let middle = (len == 2).then(|| path[1]);

    let (rule, binding, ctx_path) = match commons.len() {
        0 => {
            w.note("no common remaining neighbor: C0C");
            ("CNP+CNP", bind(&[("u1", u1), ("u2", u2)]), Some(path.clone()))
        }
        1 => {
            let v = commons[0];
            let specials = [(u1, u2, &r1), (u2, u1, &r2)];
            let lone = specials.iter().find_map(|&(a, b, r)| {
                r.iter()
                    .copied()
                    .find(|&x| x != v && !g.has_edge(x, v))
                    .map(|x| (a, b, x))
            });
            if let Some((a, b, x)) = lone {
                w.note(format!("C1C, {a} has the remaining neighbor {x} missing {v}: COCa"));
                let mut p = path.clone();
                if a != u1 {
                    p.reverse();
                }
                ("CVpp+CNP", bind(&[("u1", a), ("u2", b), ("v", v), ("v1", x)]), Some(p))
            } else if g.degree(u1) == 2 || g.degree(u2) == 2 {
                let (a, b) = if g.degree(u1) == 2 { (u1, u2) } else { (u2, u1) };
                w.note(format!("C1C, {a} has degree 2: TwoAny"));
                match (g.degree(b) == 2, adjacent, middle) {
                    (true, true, _) => ("Xr", bind(&[("u1", a), ("u2", b), ("v", v)]), None),
                    (_, false, Some(m)) if !g.has_edge(v, m) => {
                        w.note(format!("{v} and {m} non-adjacent: suppress {a}"));
                        let (x, y) = (v.min(m), v.max(m));
                        ("Ct", bind(&[("u1", a), ("v1", x), ("v2", y)]), None)
                    }
                    (true, false, Some(m)) => {
                        let rule = if w.odd(v) || w.odd(m) { "Xs" } else { "Xt" };
                        (rule, bind(&[("u1", a), ("u2", b), ("v", v), ("w", m)]), None)
                    }
                    (false, true, _) => ("Xp", bind(&[("u1", a), ("u2", b), ("v", v)]), None),
                    (false, false, Some(m)) => {
                        ("Xup", bind(&[("u1", a), ("u2", b), ("v", v), ("w", m)]), None)
                    }
                    _ => return Err(w.fail("degree-2 special at distance above 2")),
                }
            } else if let Some(m) = middle {
                w.note(format!("C1C at distance 2, commons {m} and {v}: Rx"));
                let (v1, v2) = (m, v);
                if !g.has_edge(v1, v2) {
                    ("Xe", bind(&[("u1", u1), ("u2", u2), ("v1", v1), ("v2", v2)]), None)
                } else if let Some((v3, v4)) = separated(g, u1, u2, v1, v2, &r1, &r2) {
                    w.note(format!("{{{v1},{v2}}} separates {v3} from {v4}"));
                    (
                        "Xg",
                        bind(&[("u1", u1), ("u2", u2), ("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4)]),
                        None,
                    )
                } else {
                    ("Xf", bind(&[("u1", u1), ("u2", u2), ("v1", v1), ("v2", v2)]), None)
                }
            } else if adjacent && g.degree(u1) == 3 && g.degree(u2) == 3 {
                let x1 = r1.iter().copied().find(|&x| x != v).unwrap();
                let x2 = r2.iter().copied().find(|&x| x != v).unwrap();
                w.note(format!("C1C, adjacent, both degree 3: TTb with {x1}, {x2}"));
                if !w.odd(x1) || !w.odd(x2) {
                    let (a, b, xa, xb) = if !w.odd(x1) { (u2, u1, x2, x1) } else { (u1, u2, x1, x2) };
                    (
                        "Xa",
                        bind(&[("u1", a), ("u2", b), ("v", v), ("v1", xa), ("v2", xb)]),
                        None,
                    )
                } else {
                    let b = bind(&[("u1", u1), ("u2", u2), ("v", v), ("v1", x1), ("v2", x2)]);
                    match (w.odd(v), g.has_edge(x1, x2)) {
                        (true, false) => ("Xd", b, None),
                        (true, true) => ("Xbb", b, None),
                        (false, _) => ("Xc", b, None),
                    }
                }
            } else if adjacent {
                w.note("C1C, adjacent, a special of degree 4: FFb");
                let mut pick = None;
                'outer: for (a, b, ra, rb) in [(u1, u2, &r1, &r2), (u2, u1, &r2, &r1)] {
                    for &x in ra.iter().filter(|&&x| x != v) {
                        for &y in rb.iter().filter(|&&y| y != v) {
                            if !g.has_edge(x, y) {
                                pick = Some((a, b, x, y));
                                break 'outer;
                            }
                        }
                    }
                }
                let Some((a, b, x, y)) = pick else {
                    return Err(w.fail("FFb without a non-adjacent pair of remaining neighbors"));
                };
                ("Xd", bind(&[("u1", a), ("u2", b), ("v", v), ("v1", x), ("v2", y)]), None)
            } else {
                return Err(w.fail("one common neighbor at distance above 2"));
            }
        }
        2 => {
            let (v, vp) = (commons[0], commons[1]);
            if !g.has_edge(v, vp) {
                if g.degree(u1) == 4 || g.degree(u2) == 4 {
                    let (a, b) = if g.degree(u2) == 4 { (u1, u2) } else { (u2, u1) };
                    w.note(format!("C2C, commons non-adjacent, {b} of degree 4: Crr"));
                    let loose = [&r1, &r2].into_iter().flatten().copied().find(|&x| {
                        x != v && x != vp && (!g.has_edge(x, v) || !g.has_edge(x, vp))
                    });
                    match loose {
                        Some(x) => (
                            "Xh",
                            bind(&[("u1", a), ("u2", b), ("v", v), ("vp", vp), ("x", x)]),
                            None,
                        ),
                        None => ("Xi", bind(&[("u1", a), ("u2", b), ("v", v), ("vp", vp)]), None),
                    }
                } else {
                    let rule = if !w.odd(v) || !w.odd(vp) { "Xj" } else { "Xk" };
                    (rule, bind(&[("u1", u1), ("u2", u2), ("v", v), ("vp", vp)]), None)
                }
            } else if adjacent {
                ("Xm", bind(&[("u1", u1), ("u2", u2), ("v", v), ("vp", vp)]), None)
            } else if let Some(m) = middle {
                let rule = if g.degree(u1) == 3 && g.degree(u2) == 3 { "Xl" } else { "Xlp" };
                (
                    rule,
                    bind(&[("u1", u1), ("u2", u2), ("v", v), ("vp", vp), ("vpp", m)]),
                    None,
                )
            } else {
                return Err(w.fail("two commons at distance above 2"));
            }
        }
        3 => {
            let c = &commons;
            let adj = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
                .into_iter()
                .find(|&(i, j, _)| g.has_edge(c[i], c[j]));
            let (rule, (i, j, k)) = match adj {
                Some(t) => ("Xo", t),
                None => ("Xn", (0, 1, 2)),
            };
            (rule, bind(&[("u1", u1), ("u2", u2), ("v", c[i]), ("vp", c[j]), ("vpp", c[k])]), None)
        }
        _ => return Err(w.fail("more than three common remaining neighbors")),
    };

    let r = catalog().rule(rule).expect("every leaf is in the catalog");
    if let Err(e) = check_matcher(g, r, &binding) {
        return Err(w.fail(&format!("binding rejected by the catalog matcher ({e})")));
    }
    w.note(format!("leaf {rule}"));
    let (edits, optional) = instantiate_edits(&r.edits, &binding);
    let special = r.special.iter().map(|s| binding[s]).collect();
    Ok(RuleMatch {
        rule_id: rule.to_string(),
        binding,
        special,
        context: match ctx_path {
            Some(p) => MatchContext::Path(p),
            None => MatchContext::None,
        },
        edits,
        optional_edits: optional,
        transcript: w.transcript,
    })
}

/// Catalog edits with roles replaced, split into required and optional.
pub(crate) fn instantiate_edits(t: &[EditTemplate], b: &Binding) -> (Vec<Edit>, Vec<Edit>) {
    let mut req = Vec::new();
    let mut opt = Vec::new();
    for e in t {
        match e {
            EditTemplate::Shortcut {
                shortcut,
                via,
                optional,
            } => {
                let edit = Edit::Shortcut {
                    a: b[&shortcut[0]],
                    b: b[&shortcut[1]],
                    via: via.iter().map(|r| b[r]).collect(),
                };
                if *optional { opt.push(edit) } else { req.push(edit) }
            }
            EditTemplate::Add { add } => req.push(Edit::Add(b[&add[0]], b[&add[1]])),
            EditTemplate::Remove { remove } => req.push(Edit::Remove(b[&remove[0]], b[&remove[1]])),
        }
    }
    (req, opt)
}

/// The first pair (x, y), x a remaining neighbor of u1 and y one of u2
/// (neither a common neighbor), that `{v1, v2}` separates once the specials
/// are removed, provided it separates all such pairs.
fn separated(
    g: &Graph,
    u1: usize,
    u2: usize,
    v1: usize,
    v2: usize,
    r1: &[usize],
    r2: &[usize],
) -> Option<(usize, usize)> {
    let own = |r: &[usize]| -> Vec<usize> {
        r.iter().copied().filter(|&x| x != v1 && x != v2 && x != u1 && x != u2).collect()
    };
    let (a, b) = (own(r1), own(r2));
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let comps = g.components_avoiding(&[u1, u2, v1, v2]);
    let comp_of = |x: usize| comps.iter().position(|c| c.contains(&x));
    let all_apart = a
        .iter()
        .all(|&x| b.iter().all(|&y| comp_of(x) != comp_of(y)));
    all_apart.then(|| (a[0], b[0]))
}
