//! Dispatch of a four-vertex family with its subdivision to one of the
//! distant (D), semi-distant (J) or close (R) configurations.

use std::collections::BTreeMap;

use graph_core::Graph;
use subdivision::{InactivationTarget, Kind, ProblemReport, Subdivision};

use crate::catalog::catalog;
use crate::{MatchContext, RuleError, RuleMatch};

fn shared(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

/// Labels the configuration formed by `s` and its problem report, binds
/// u1..u4 and lists the coloring constraints that the recoloring should try
/// first: each distant problem asks that its root not end on the color of
/// the path it touches.
pub fn select_cii_composite(
    g: &Graph,
    roots: [usize; 4],
    s: &Subdivision,
    report: &ProblemReport,
) -> Result<RuleMatch, RuleError> {
    let mut t = vec![format!("{:?} on roots {roots:?}", s.kind)];
    let fail = |mut t: Vec<String>, why: &str| {
        t.push(format!("unmatched: {why}"));
        Err(RuleError::UnmatchedCase(t))
    };
    let k4 = s.kind == Kind::K4;
    let on_s = s.on_s(g.n());
    let rem: BTreeMap<usize, Vec<usize>> =
        roots.iter().map(|&u| (u, s.remaining_neighbors(g, u))).collect();
    let d = &report.distant;
    let mut order = roots;
    t.push(format!("{} distant, {} close groups", d.len(), report.close.len()));

    let label: &str = if d.len() >= 3 {
        if !k4 {
            return fail(t, "three distant problems on a C4+");
        }
        let mut cnt = vec![0usize; s.paths.len()];
        for p in d {
            cnt[p.path] += 1;
        }
        let p1 = cnt.iter().filter(|&&c| c == 1).count();
        let p2 = cnt.iter().filter(|&&c| c == 2).count();
        let zero: Vec<(usize, usize)> = (0..s.paths.len())
            .filter(|&i| cnt[i] == 0)
            .map(|i| s.ends(i))
            .collect();
        let mut touched: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &zero {
            *touched.entry(a).or_default() += 1;
            *touched.entry(b).or_default() += 1;
        }
        t.push(format!("p1 = {p1}, p2 = {p2}, 0-paths {zero:?}"));
        match (d.len(), p1, p2) {
            (3, 3, 0) if touched.len() == 3 => "D1",
            (3, 3, 0) if touched.len() == 4 && touched.values().all(|&k| k <= 2) => "D2",
            (3, 1, 1) | (4, 0, 2) => "D3",
            (4, 4, 0) if touched.len() == 4 => "D4",
            _ => return fail(t, "distant problems in an excluded pattern"),
        }
    } else if report.close.is_empty() {
        let same_path = d.len() == 2 && d[0].path == d[1].path && d[0].root != d[1].root;
        match (k4, same_path) {
            (true, false) => "J1",
            (false, false) => "J5",
            (false, true) => "J6",
            (true, true) => {
                let (a, b) = (d[0].root, d[1].root);
                let (c, e) = s.ends(d[0].path);
                order = [a, b, c, e];
                let outside = |p: &subdivision::DistantProblem| {
                    let on = &s.paths[p.path];
                    if on.contains(&p.pair.0) { p.pair.1 } else { p.pair.0 }
                };
                let (x, y) = (outside(&d[0]), outside(&d[1]));
                let ab = s.paths_between(a, b)[0];
                let l = s.paths[ab].len() - 1;
                let both = |u: usize| rem[&u].contains(&x) && rem[&u].contains(&y);
                let spread = |u: usize, w: usize| {
                    (rem[&u].contains(&x) || rem[&w].contains(&x))
                        && (rem[&u].contains(&y) || rem[&w].contains(&y))
                };
                t.push(format!("same path {c}-{e}, l({a},{b}) = {l}, others {x} {y}"));
                if l == 1 && (both(c) || both(e)) {
                    "J3"
                } else if l == 2 && {
                    let w = s.paths[ab][1];
                    g.has_edge(w, c) && g.has_edge(w, e) && spread(c, e)
                } {
                    "J4"
                } else {
                    "J2"
                }
            }
        }
    } else if !k4 {
        let twice = (0..4).any(|i| {
            (i + 1..4).any(|j| {
                s.link(roots[i], roots[j]) == 2 && !shared(&rem[&roots[i]], &rem[&roots[j]]).is_empty()
            })
        });
        if twice { "R9" } else { "R8" }
    } else {
        let mut involved: Vec<usize> = report.close.iter().flatten().copied().collect();
        involved.sort_unstable();
        involved.dedup();
        let sh = |a: usize, b: usize| shared(&rem[&a], &rem[&b]);
        t.push(format!("close roots {involved:?}"));
        match involved.len() {
            2 => {
                let (a, b) = (involved[0], involved[1]);
                let common = sh(a, b);
                let rest: Vec<usize> = roots.iter().copied().filter(|r| !involved.contains(r)).collect();
                order = [a, b, rest[0], rest[1]];
                let v = common[0];
                if !on_s[v] {
                    match common.get(1) {
                        None => "R1",
                        Some(&v2) if on_s[v2] => "R2",
                        Some(_) => return fail(t, "two roots sharing two vertices off S"),
                    }
                } else {
                    let ab = s.paths_between(a, b)[0];
                    let p = &s.paths[ab];
                    if p.len() == 3 && rest.iter().all(|&r| g.has_edge(p[1], r)) {
                        "J4"
                    } else {
                        "R3"
                    }
                }
            }
            3 => {
                let pairs = [(0, 1), (0, 2), (1, 2)];
                let linked = pairs
                    .iter()
                    .filter(|&&(i, j)| !sh(involved[i], involved[j]).is_empty())
                    .count();
                let all_three = rem[&involved[0]]
                    .iter()
                    .any(|x| rem[&involved[1]].contains(x) && rem[&involved[2]].contains(x));
                if all_three {
                    return fail(t, "a vertex shared by three roots");
                }
                if linked == 3 { "R4" } else { "R5" }
            }
            4 => {
                if report.close.len() == 2 {
                    let off = report.close.iter().all(|grp| {
                        grp.iter().all(|&a| grp.iter().all(|&b| a == b || sh(a, b).iter().all(|&v| !on_s[v])))
                    });
                    if off { "R6" } else { "R3" }
                } else {
                    let double = (0..4).any(|i| (i + 1..4).any(|j| sh(roots[i], roots[j]).len() >= 2));
                    if double { "R7" } else { "R3" }
                }
            }
            _ => return fail(t, "close problem with fewer than two roots"),
        }
    };
    t.push(format!("label {label}"));
    let targets: Vec<InactivationTarget> = d
        .iter()
        .map(|p| InactivationTarget {
            root: p.root,
            path: p.path,
        })
        .collect();
    debug_assert!(catalog().rule(label).is_some());
    let binding = ["u1", "u2", "u3", "u4"]
        .iter()
        .zip(order)
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    Ok(RuleMatch {
        rule_id: label.to_string(),
        binding,
        special: roots.to_vec(),
        context: MatchContext::Subdivision {
            s: s.clone(),
            targets,
        },
        edits: Vec::new(),
        optional_edits: Vec::new(),
        transcript: t,
    })
}
