use std::collections::BTreeMap;

use decomp_model::{classify_class, verify_good_coloring, verify_path_coloring, EdgeColoring, ShapeKind};
use exact_oracle::{decompose_within, greedy_paths, min_path_decomposition, Within};
use graph_core::{classify_exception, edge, for_each_subset, is_planar, Edge, Exception, Graph};
use structure_analysis::{find_configuration, ConfigurationKind, SmallCuts};
use subdivision::{all_two_colorings, classify_problems, find_k_subdivision, redirect, two_color};

use crate::catalog::{catalog, instantiate_program};
use crate::ci::match_ci_rule;
use crate::cii::select_cii_composite;
use crate::lift::{lift_program, lift_search, LiftSettings};
use crate::reduce::{apply_rule_with, context_edges, Reduction};
use crate::trace::{FiringChecks, Trace, TraceStep};
use crate::{Edit, MatchContext, RuleError, RuleMatch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Graphs with at most this many vertices go straight to the oracle.
    pub exact_threshold: usize,
    /// Node budget of each oracle call.
    pub oracle_budget: u64,
    /// Node budget of each recoloring search.
    pub search_budget: u64,
    /// Complete assignments a search may reject before giving up.
    pub max_accepts: usize,
    /// Edit sets tried per match.
    pub max_variants: usize,
    /// Low-degree pairs tried before falling back.
    pub max_pairs: usize,
    /// Four-vertex families tried before falling back, the found one
    /// included.
    pub max_families: usize,
    /// Largest graph handed to the oracle when every rule failed.
    pub fallback_oracle_max_n: usize,
    /// Search nodes for the whole run; past it, failures fall back at once.
    pub work_budget: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            exact_threshold: 8,
            oracle_budget: exact_oracle::DEFAULT_NODE_BUDGET,
            search_budget: 20_000,
            max_accepts: 64,
            max_variants: 5,
            max_pairs: 3,
            max_families: 10,
            fallback_oracle_max_n: 14,
            work_budget: 20_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub coloring: EdgeColoring,
    pub trace: Trace,
    /// The coloring uses at most ⌊n/2⌋ paths, or ⌈n/2⌉ on K3 and K5⁻.
    pub meets_bound: bool,
    /// The input is K3 or K5⁻.
    pub relaxed: bool,
    pub search_nodes: u64,
}

/// K3 as one cycle; K5⁻ as a 5-cycle and a 4-edge path.
pub fn exceptional_coloring(h: &Graph) -> Option<EdgeColoring> {
    match classify_exception(h) {
        Exception::K3 => EdgeColoring::from_classes([h.edges().to_vec()]).ok(),
        Exception::K5Minus => {
            for a in 1..5 {
                for b in (1..5).filter(|&b| b != a) {
                    for c in (1..5).filter(|&c| c != a && c != b) {
                        let d = 10 - a - b - c;
                        if a > d {
                            continue;
                        }
                        let cyc = [0, a, b, c, d, 0];
                        if cyc.windows(2).any(|w| !h.has_edge(w[0], w[1])) {
                            continue;
                        }
                        let cycle: Vec<Edge> = cyc.windows(2).map(|w| edge(w[0], w[1])).collect();
                        let path: Vec<Edge> =
                            h.edges().iter().copied().filter(|e| !cycle.contains(e)).collect();
                        if classify_class(&path).kind == ShapeKind::Path {
                            return EdgeColoring::from_classes([path, cycle]).ok();
                        }
                    }
                }
            }
            None
        }
        Exception::Other => None,
    }
}

struct Engine<'o> {
    opts: &'o Options,
    steps: Vec<TraceStep>,
    work: u64,
}

enum Mode {
    /// K3 and K5⁻ components come back with their cycle.
    Cycles,
    /// Every class is a path; K3 and K5⁻ use one path more than ⌊n/2⌋.
    Paths,
}

impl Engine<'_> {
    fn named(binding: &BTreeMap<String, usize>, names: &[usize]) -> BTreeMap<String, usize> {
        binding.iter().map(|(k, &v)| (k.clone(), names[v])).collect()
    }

    fn leaf(&mut self, rule: &str, g: &Graph, c: &EdgeColoring, fallback: Option<String>) {
        self.steps.push(TraceStep {
            rule_id: rule.to_string(),
            binding: BTreeMap::new(),
            n: g.n(),
            budget_before: 0,
            budget_after: c.num_colors(),
            fallback,
            variant: 0,
            release: 0,
            checks: None,
            unmatched: None,
        });
    }

    fn oracle(&mut self, g: &Graph, target: usize, fallback: Option<String>) -> Option<EdgeColoring> {
        match decompose_within(g, target, self.opts.oracle_budget).0 {
            Within::Found(c) => {
                self.leaf("oracle", g, &c, fallback);
                Some(c)
            }
            Within::Impossible | Within::Timeout => None,
        }
    }

    /// Colors a connected graph.
    fn component(&mut self, h: &Graph, names: &[usize], mode: Mode) -> EdgeColoring {
        let exc = classify_exception(h);
        if exc != Exception::Other {
            if let Mode::Cycles = mode {
                let c = exceptional_coloring(h).expect("K3 and K5- have the standard coloring");
                let id = if exc == Exception::K3 { "K3" } else { "K5-" };
                self.leaf(id, h, &c, None);
                return c;
            }
            if let Some(c) = self.oracle(h, h.n().div_ceil(2), None) {
                return c;
            }
        }
        self.solve(h, names)
    }

    fn solve(&mut self, g: &Graph, names: &[usize]) -> EdgeColoring {
        if g.n() <= self.opts.exact_threshold.max(2) {
            if let Some(c) = self.oracle(g, g.n() / 2, None) {
                return c;
            }
            return self.fallback(g, "oracle could not meet the bound".into());
        }
        let reason = match find_configuration(g) {
            Ok(w) if w.kind == ConfigurationKind::CI => {
                let mut tried = Vec::new();
                for (u1, u2) in low_pairs(g, self.opts.max_pairs) {
                    match self.try_ci(g, names, u1, u2) {
                        Ok(c) => return c,
                        Err(rule) => tried.push(rule),
                    }
                    if self.work > self.opts.work_budget {
                        break;
                    }
                }
                let mut reason = format!("no CI rule could be lifted ({})", tried.join(", "));
                // A graph can hold both kinds of configuration; a CII family
                // is the next thing to try.
                let fams = families(g, None, self.opts.max_families);
                if !fams.is_empty() && self.work <= self.opts.work_budget {
                    match self.try_families(g, names, fams) {
                        Ok(c) => return c,
                        Err(why) => reason = format!("{reason}; {why}"),
                    }
                }
                reason
            }
            Ok(w) => match w.four_family {
                Some(roots) => match self.try_families(g, names, families(g, Some(roots), self.opts.max_families)) {
                    Ok(c) => return c,
                    Err(why) => why,
                },
                None => "CII witness without a family".into(),
            },
            Err(e) => e.to_string(),
        };
        self.fallback(g, reason)
    }

    fn try_families(&mut self, g: &Graph, names: &[usize], fams: Vec<[usize; 4]>) -> Result<EdgeColoring, String> {
        let mut tried = Vec::new();
        for roots in fams {
            match self.try_cii(g, names, roots) {
                Ok(c) => return Ok(c),
                Err(why) => tried.push(why),
            }
            if self.work > self.opts.work_budget {
                break;
            }
        }
        Err(tried.join("; "))
    }

    fn fallback(&mut self, g: &Graph, reason: String) -> EdgeColoring {
        if g.n() <= self.opts.fallback_oracle_max_n {
            if let Some(c) = self.oracle(g, g.n() / 2, Some(reason.clone())) {
                return c;
            }
            if let Ok(r) = min_path_decomposition(g, self.opts.oracle_budget) {
                self.leaf("oracle", g, &r.witness, Some(reason));
                return r.witness;
            }
        }
        let c = greedy_paths(g);
        self.leaf("greedy", g, &c, Some(reason));
        c
    }

    /// Colors every component of G' - U.
    fn color_reduced(&mut self, red: &Reduction, names: &[usize], relaxed: bool) -> EdgeColoring {
        let mut classes: Vec<Vec<Edge>> = Vec::new();
        for comp in red.graph.components_avoiding(&red.special) {
            if comp.len() < 2 {
                continue;
            }
            let (h, map) = red.graph.induced(&comp);
            let child: Vec<usize> = map.iter().map(|&v| names[v]).collect();
            let mode = if relaxed { Mode::Paths } else { Mode::Cycles };
            let c = self.component(&h, &child, mode);
            classes.extend(c.relabeled(&map).classes());
        }
        EdgeColoring::from_classes(classes).expect("components are edge-disjoint")
    }

    fn checks(g: &Graph, red: &Reduction, pc: &EdgeColoring, c: &EdgeColoring) -> FiringChecks {
        let removed = red.special.len();
        FiringChecks {
            planar: is_planar(&red.graph),
            path_valid: verify_path_coloring(g, c, false).is_ok_and(|r| r.ok),
            within_budget: c.num_colors() <= pc.num_colors() + removed / 2,
            shrinks: red.order() < g.n(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        g: &Graph,
        names: &[usize],
        m: &RuleMatch,
        pc: &EdgeColoring,
        c: &EdgeColoring,
        checks: FiringChecks,
        variant: usize,
        release: usize,
    ) {
        self.steps.push(TraceStep {
            rule_id: m.rule_id.clone(),
            binding: Self::named(&m.binding, names),
            n: g.n(),
            budget_before: pc.num_colors(),
            budget_after: c.num_colors(),
            fallback: None,
            variant,
            release,
            checks: Some(checks),
            unmatched: None,
        });
    }

    /// Lifts `pc` through the match with the rule's program, then with the
    /// search at increasing release levels.
    #[allow(clippy::too_many_arguments)]
    fn lift(
        &mut self,
        g: &Graph,
        names: &[usize],
        m: &RuleMatch,
        red: &Reduction,
        pc: &EdgeColoring,
        s_options: &[Vec<Vec<Edge>>],
        program: bool,
        variant: usize,
    ) -> Option<EdgeColoring> {
        let rule = catalog().rule(&m.rule_id).expect("matched rules exist");
        if program {
            if let Ok(Some(prog)) = instantiate_program(rule, &m.binding) {
                if let Ok(c) = lift_program(g, pc, &prog) {
                    let ch = Self::checks(g, red, pc, &c);
                    if ch.all() {
                        self.record(g, names, m, pc, &c, ch, variant, 0);
                        return Some(c);
                    }
                }
            }
        }
        let forced_options: &[bool] = if red.shortcuts.is_empty() { &[true] } else { &[true, false] };
        for release in 0..=2 {
            for &forced in forced_options {
                for s_classes in s_options {
                    if self.work > self.opts.work_budget {
                        return None;
                    }
                    let set = LiftSettings {
                        release,
                        forced,
                        node_budget: self.opts.search_budget,
                        max_accepts: self.opts.max_accepts,
                    };
                    let lifted = lift_search(g, red, pc, s_classes, rule.budget, set);
                    self.work += lifted.nodes;
                    if let Some(c) = lifted.coloring {
                        let ch = Self::checks(g, red, pc, &c);
                        if ch.all() {
                            self.record(g, names, m, pc, &c, ch, variant, release);
                            return Some(c);
                        }
                    }
                }
            }
        }
        None
    }

    fn unmatched(&mut self, g: &Graph, e: &RuleError) {
        self.steps.push(TraceStep {
            rule_id: "unmatched".into(),
            binding: BTreeMap::new(),
            n: g.n(),
            budget_before: 0,
            budget_after: 0,
            fallback: None,
            variant: 0,
            release: 0,
            checks: None,
            unmatched: Some(e.to_string()),
        });
    }

    fn try_ci(&mut self, g: &Graph, names: &[usize], u1: usize, u2: usize) -> Result<EdgeColoring, String> {
        let m = match match_ci_rule(g, u1, u2) {
            Ok(m) => m,
            Err(e) => {
                self.unmatched(g, &e);
                return Err("unmatched".into());
            }
        };
        let rule = catalog().rule(&m.rule_id).expect("matched rules exist");
        let s_options: Vec<Vec<Vec<Edge>>> = match &m.context {
            MatchContext::Path(_) => vec![vec![context_edges(&m)]],
            _ => vec![Vec::new()],
        };
        let relaxed = rule.removes % 2 == 1;
        for (vi, edits) in variants(g, &m).into_iter().take(self.opts.max_variants).enumerate() {
            let Ok(red) = apply_rule_with(g, &m, &edits) else {
                continue;
            };
            let pc = self.color_reduced(&red, names, relaxed);
            if let Some(c) = self.lift(g, names, &m, &red, &pc, &s_options, vi == 0, vi) {
                return Ok(c);
            }
            if self.work > self.opts.work_budget {
                break;
            }
        }
        Err(m.rule_id)
    }

    fn try_cii(&mut self, g: &Graph, names: &[usize], roots: [usize; 4]) -> Result<EdgeColoring, String> {
        let s = find_k_subdivision(g, roots, subdivision::DEFAULT_SEARCH_BUDGET).map_err(|e| e.to_string())?;
        let s = redirect(g, &s).map(|(r, _)| r).unwrap_or(s);
        let report = classify_problems(g, &s);
        let m = match select_cii_composite(g, roots, &s, &report) {
            Ok(m) => m,
            Err(e) => {
                self.unmatched(g, &e);
                return Err(e.to_string());
            }
        };
        let MatchContext::Subdivision { targets, .. } = &m.context else {
            unreachable!("CII matches carry their subdivision");
        };
        let mut colorings = Vec::new();
        if let Ok(c) = two_color(&s, targets) {
            colorings.push(c);
        }
        for c in all_two_colorings(&s) {
            if !colorings.contains(&c) {
                colorings.push(c);
            }
        }
        let s_options: Vec<Vec<Vec<Edge>>> =
            colorings.iter().map(|c| vec![c.red.clone(), c.blue.clone()]).collect();
        for (vi, edits) in variants(g, &m).into_iter().take(self.opts.max_variants).enumerate() {
            let Ok(red) = apply_rule_with(g, &m, &edits) else {
                continue;
            };
            let pc = self.color_reduced(&red, names, false);
            if let Some(c) = self.lift(g, names, &m, &red, &pc, &s_options, false, vi) {
                return Ok(c);
            }
        }
        Err(format!("{} could not be lifted", m.rule_id))
    }
}

/// `first`, then other sets of four degree-5 vertices with respect to which
/// `g` is almost 4-connected, up to `k` families in all.
fn families(g: &Graph, first: Option<[usize; 4]>, k: usize) -> Vec<[usize; 4]> {
    let mut out: Vec<[usize; 4]> = first.into_iter().collect();
    let fives: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 5).collect();
    let cuts = SmallCuts::new(g);
    let mut scanned = 0;
    for_each_subset(fives.len(), 4, |idx| {
        if idx.len() < 4 {
            return true;
        }
        scanned += 1;
        let f = [fives[idx[0]], fives[idx[1]], fives[idx[2]], fives[idx[3]]];
        if Some(f) != first && cuts.check(g, &f).is_ok() {
            out.push(f);
        }
        out.len() < k && scanned < 2_000
    });
    out
}

/// Pairs of vertices of degree at most 4 under the order (degree, id), in
/// lexicographic order of positions, the first being the one `find_ci`
/// returns.
fn low_pairs(g: &Graph, k: usize) -> Vec<(usize, usize)> {
    let mut low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) <= 4).collect();
    low.sort_by_key(|&v| (g.degree(v), v));
    let mut out = Vec::new();
    for j in 1..low.len() {
        for i in 0..j {
            out.push((low[i].min(low[j]), low[i].max(low[j])));
            if out.len() == k {
                return out;
            }
        }
    }
    out
}

/// One shortcut per special vertex between two of its neighbors outside the
/// configuration, when they are non-adjacent and the pair is not yet used.
fn auto_shortcuts(g: &Graph, m: &RuleMatch, base: &[Edit]) -> Vec<Edit> {
    let s_edges = context_edges(m);
    let mut used_via: Vec<usize> = Vec::new();
    let mut pairs: Vec<Edge> = Vec::new();
    for e in base {
        match e {
            Edit::Shortcut { a, b, via } => {
                used_via.extend(via);
                pairs.push(edge(*a, *b));
            }
            Edit::Add(a, b) => pairs.push(edge(*a, *b)),
            Edit::Remove(..) => {}
        }
    }
    let mut out = Vec::new();
    for &u in &m.special {
        if used_via.contains(&u) {
            continue;
        }
        let cand: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&x| !m.special.contains(&x) && !s_edges.contains(&edge(u, x)))
            .collect();
        'pick: for (i, &a) in cand.iter().enumerate() {
            for &b in &cand[i + 1..] {
                let e = edge(a, b);
                let kept = g.has_edge(a, b) && !s_edges.contains(&e);
                if !kept && !pairs.contains(&e) {
                    pairs.push(e);
                    out.push(Edit::Shortcut { a, b, via: vec![u] });
                    break 'pick;
                }
            }
        }
    }
    out
}

/// Edit sets to try, in order: the catalog edits, the catalog edits with
/// extra shortcuts, and the required edits alone when some are optional.
fn variants(g: &Graph, m: &RuleMatch) -> Vec<Vec<Edit>> {
    let mut base = m.edits.clone();
    base.extend(m.optional_edits.iter().cloned());
    let mut out = vec![base.clone()];
    let extra = auto_shortcuts(g, m, &base);
    if !extra.is_empty() {
        let mut v = base.clone();
        v.extend(extra.iter().cloned());
        out.push(v);
    }
    if let Ok(red) = apply_rule_with(g, m, &base) {
        let parity = parity_removals(g, m, &red);
        if !parity.is_empty() {
            let mut v = base.clone();
            v.extend(parity.iter().cloned());
            out.push(v);
            if !extra.is_empty() {
                let mut v = base.clone();
                v.extend(extra);
                v.extend(parity);
                out.push(v);
            }
        }
    }
    if !m.optional_edits.is_empty() {
        out.push(m.edits.clone());
    }
    out
}

/// For each special vertex, removes one edge of G' joining two of its
/// remaining neighbors of even degree in G', so that both become ends of
/// paths of the reduced coloring.
fn parity_removals(g: &Graph, m: &RuleMatch, red: &Reduction) -> Vec<Edit> {
    let mut taken: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for &u in &m.special {
        let even: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&x| !m.special.contains(&x) && red.graph.degree(x).is_multiple_of(2) && !taken.contains(&x))
            .collect();
        'pick: for (i, &a) in even.iter().enumerate() {
            for &b in &even[i + 1..] {
                if g.has_edge(a, b) && red.graph.has_edge(a, b) && !red.is_added(edge(a, b)) {
                    taken.extend([a, b]);
                    out.push(Edit::Remove(a, b));
                    break 'pick;
                }
            }
        }
    }
    out
}

/// Lifts `pc`, a coloring of the reduced graph of `m` with its catalog
/// edits, to a coloring of `g`: by the rule's program when it has one,
/// otherwise by search. The result is verified.
pub fn recolor(g: &Graph, m: &RuleMatch, pc: &EdgeColoring) -> Result<EdgeColoring, RuleError> {
    let mut edits = m.edits.clone();
    edits.extend(m.optional_edits.iter().cloned());
    let red = apply_rule_with(g, m, &edits)?;
    let opts = Options::default();
    let mut engine = Engine {
        opts: &opts,
        steps: Vec::new(),
        work: 0,
    };
    let names: Vec<usize> = (0..g.n()).collect();
    let s_options: Vec<Vec<Vec<Edge>>> = match &m.context {
        MatchContext::None => vec![Vec::new()],
        MatchContext::Path(_) => vec![vec![context_edges(m)]],
        MatchContext::Subdivision { s, .. } => all_two_colorings(s)
            .into_iter()
            .map(|c| vec![c.red, c.blue])
            .collect(),
    };
    engine
        .lift(g, &names, m, &red, pc, &s_options, true, 0)
        .ok_or_else(|| RuleError::RecoloringInvalid {
            rule: m.rule_id.clone(),
            reason: "no recoloring within the budget".into(),
        })
}

/// Decomposes a connected planar graph into paths, recording every step.
pub fn decompose(g: &Graph, opts: &Options) -> Result<Decomposition, RuleError> {
    if !g.is_connected() {
        return Err(RuleError::InvalidInput("graph not connected".into()));
    }
    if !is_planar(g) {
        return Err(RuleError::InvalidInput("graph is not planar".into()));
    }
    let relaxed = classify_exception(g) != Exception::Other;
    let mut engine = Engine {
        opts,
        steps: Vec::new(),
        work: 0,
    };
    let names: Vec<usize> = (0..g.n()).collect();
    let coloring = if g.m() == 0 {
        EdgeColoring::from_classes(Vec::<Vec<Edge>>::new()).expect("empty coloring")
    } else {
        engine.component(g, &names, Mode::Paths)
    };
    let meets_bound = verify_good_coloring(g, &coloring, relaxed).is_ok_and(|r| r.ok);
    Ok(Decomposition {
        coloring,
        trace: Trace { steps: engine.steps },
        meets_bound,
        relaxed,
        search_nodes: engine.work,
    })
}
