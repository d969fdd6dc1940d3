use std::collections::BTreeMap;
use std::path::PathBuf;

use decomp_model::{verify_good_coloring, EdgeColoring};
use exact_oracle::{lower_bound, random_min_degree5_planar, random_planar_graph, random_triangulation};
use graph_core::{to_graph6, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rule_engine::{decompose, Options, Trace};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Corpus {
    /// Random spanning tree plus random edges kept while planar.
    Planar,
    /// Random triangulations.
    Triangulation,
    /// Minimum degree 5, which forces the four-vertex configurations.
    MinDegree5,
    /// The three above in turn.
    Mixed,
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Target edge count per vertex for the planar corpus.
    pub m_density: f64,
    pub count: usize,
    pub seed: u64,
    pub corpus: Corpus,
    /// Where reproducers of failing instances go; none are written without it.
    pub out_dir: Option<PathBuf>,
    /// Corrupts some outputs on purpose, to exercise the failure path.
    pub inject_bug: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub corpus: Corpus,
    pub seed: u64,
    pub n_range: (usize, usize),
    pub m_density: f64,
    pub count: usize,
    pub meets_bound: usize,
    pub meets_bound_ratio: f64,
    pub failures: usize,
    pub failed_instances: Vec<usize>,
    /// Instances where some step fell back to the oracle or to greedy paths.
    pub fallback_instances: usize,
    pub fallback_ratio: f64,
    pub unmatched_steps: usize,
    pub firings: usize,
    pub rule_histogram: BTreeMap<String, usize>,
    pub reproducers: Vec<String>,
}

/// One line of `gallai fuzz --lines`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceLine {
    pub instance: usize,
    pub n: usize,
    pub m: usize,
    pub colors: usize,
    pub meets_bound: bool,
    pub fallback: bool,
    pub reasons: Vec<String>,
}

#[derive(Serialize)]
struct Reproducer<'a> {
    seed: u64,
    instance: usize,
    graph6: String,
    reasons: &'a [String],
    trace: &'a Trace,
}

struct Outcome {
    index: usize,
    colors: usize,
    meets_bound: bool,
    reasons: Vec<String>,
    fallback: bool,
    unmatched: usize,
    histogram: BTreeMap<String, usize>,
    graph: Graph,
    trace: Trace,
}

/// The graph of instance `index`, drawn from a generator seeded by the run
/// seed and the index alone.
pub fn instance(cfg: &FuzzConfig, index: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let gseed: u64 = rng.gen();
    let corpus = match cfg.corpus {
        Corpus::Mixed => [Corpus::Planar, Corpus::Triangulation, Corpus::MinDegree5][index % 3],
        c => c,
    };
    let planar = |n: usize| {
        let cap = if n >= 3 { 3 * n - 6 } else { n.saturating_sub(1) };
        let m = ((cfg.m_density * n as f64).round() as usize).clamp(n.saturating_sub(1), cap.max(n.saturating_sub(1)));
        random_planar_graph(n, m, gseed)
    };
    match corpus {
        Corpus::Triangulation if n >= 4 => random_triangulation(n, gseed),
        Corpus::MinDegree5 => random_min_degree5_planar(n.max(12), rng.gen_range(0..3), gseed)
            .unwrap_or_else(|| random_triangulation(n.max(12), gseed)),
        _ => planar(n),
    }
}

/// Merges the two first colors, which breaks the path property whenever
/// they meet.
fn corrupt(c: &EdgeColoring) -> EdgeColoring {
    let mut classes = c.classes();
    if classes.len() >= 2 {
        let second = classes.remove(1);
        classes[0].extend(second);
    }
    EdgeColoring::from_classes(classes).expect("same edges")
}

fn check(cfg: &FuzzConfig, opts: &Options, index: usize) -> Outcome {
    let g = instance(cfg, index);
    let mut reasons = Vec::new();
    let d = match decompose(&g, opts) {
        Ok(d) => d,
        Err(e) => {
            return Outcome {
                index,
                colors: 0,
                meets_bound: false,
                reasons: vec![e.to_string()],
                fallback: false,
                unmatched: 0,
                histogram: BTreeMap::new(),
                graph: g,
                trace: Trace::default(),
            }
        }
    };
    let coloring = if cfg.inject_bug && index % 7 == 3 { corrupt(&d.coloring) } else { d.coloring.clone() };
    match verify_good_coloring(&g, &coloring, d.relaxed) {
        Ok(r) if r.ok => {}
        Ok(r) => reasons.extend(r.violations.iter().map(ToString::to_string)),
        Err(e) => reasons.push(e.to_string()),
    }
    if coloring.num_colors() < lower_bound(&g) {
        reasons.push("fewer colors than the lower bound".into());
    }
    let mut histogram = BTreeMap::new();
    for s in d.trace.firings() {
        *histogram.entry(s.rule_id.clone()).or_default() += 1;
        if let Some(c) = s.checks.filter(|c| !c.all()) {
            reasons.push(format!("firing {} on n={} failed {c:?}", s.rule_id, s.n));
        }
    }
    Outcome {
        index,
        colors: coloring.num_colors(),
        meets_bound: d.meets_bound,
        reasons,
        fallback: d.trace.fallbacks() > 0,
        unmatched: d.trace.steps.iter().filter(|s| s.unmatched.is_some()).count(),
        histogram,
        graph: g,
        trace: d.trace,
    }
}

/// Runs the fuzz corpus. Reproducers are written in instance order; the
/// summary does not depend on `jobs`.
pub fn run(cfg: &FuzzConfig, opts: &Options, jobs: usize) -> std::io::Result<FuzzSummary> {
    run_with_lines(cfg, opts, jobs).map(|(s, _)| s)
}

/// [`run`], also returning one line per instance.
pub fn run_with_lines(
    cfg: &FuzzConfig,
    opts: &Options,
    jobs: usize,
) -> std::io::Result<(FuzzSummary, Vec<InstanceLine>)> {
    let outcomes: Vec<Outcome> =
        crate::with_jobs(jobs, || (0..cfg.count).into_par_iter().map(|i| check(cfg, opts, i)).collect());
    let mut s = FuzzSummary {
        corpus: cfg.corpus,
        seed: cfg.seed,
        n_range: (cfg.n_min, cfg.n_max),
        m_density: cfg.m_density,
        count: cfg.count,
        meets_bound: 0,
        meets_bound_ratio: 0.0,
        failures: 0,
        failed_instances: Vec::new(),
        fallback_instances: 0,
        fallback_ratio: 0.0,
        unmatched_steps: 0,
        firings: 0,
        rule_histogram: BTreeMap::new(),
        reproducers: Vec::new(),
    };
    if let Some(dir) = &cfg.out_dir {
        if outcomes.iter().any(|o| !o.reasons.is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
    }
    let mut lines = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        lines.push(InstanceLine {
            instance: o.index,
            n: o.graph.n(),
            m: o.graph.m(),
            colors: o.colors,
            meets_bound: o.meets_bound,
            fallback: o.fallback,
            reasons: o.reasons.clone(),
        });
        s.meets_bound += usize::from(o.meets_bound);
        s.fallback_instances += usize::from(o.fallback);
        s.unmatched_steps += o.unmatched;
        for (k, v) in o.histogram {
            s.firings += v;
            *s.rule_histogram.entry(k).or_default() += v;
        }
        if o.reasons.is_empty() {
            continue;
        }
        s.failures += 1;
        s.failed_instances.push(o.index);
        if let Some(dir) = &cfg.out_dir {
            let name = format!("repro-{}-{}.json", cfg.seed, o.index);
            let rep = Reproducer {
                seed: cfg.seed,
                instance: o.index,
                graph6: to_graph6(&o.graph),
                reasons: &o.reasons,
                trace: &o.trace,
            };
            std::fs::write(dir.join(&name), serde_json::to_string_pretty(&rep).expect("serializes"))?;
            s.reproducers.push(name);
        }
    }
    if cfg.count > 0 {
        s.meets_bound_ratio = s.meets_bound as f64 / cfg.count as f64;
        s.fallback_ratio = s.fallback_instances as f64 / cfg.count as f64;
    }
    Ok((s, lines))
}
