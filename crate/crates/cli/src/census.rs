use std::collections::BTreeMap;

use decomp_model::verify_good_coloring;
use exact_oracle::{min_path_decomposition, ConnectedPlanar};
use graph_core::{classify_exception, Exception, Graph};
use rayon::prelude::*;
use rule_engine::{decompose, Options};
use serde::Serialize;

/// Masks handled per work item.
const CHUNK: u64 = 1 << 14;

/// Violations kept in the summary; the count covers all of them.
const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub n: usize,
    pub count: usize,
    pub meets_bound: usize,
    pub violations: usize,
    /// Edge masks of the graphs decomposed under the relaxed budget.
    pub relaxed: Vec<u64>,
    /// Edge masks where the oracle minimum exceeds ⌊n/2⌋.
    pub oracle_above_half: Vec<u64>,
    pub fallbacks: usize,
    pub firings: usize,
    pub rule_histogram: BTreeMap<String, usize>,
    /// The first violations as `mask: reason`.
    pub violation_list: Vec<String>,
}

impl CensusSummary {
    fn absorb(&mut self, o: CensusSummary) {
        self.count += o.count;
        self.meets_bound += o.meets_bound;
        self.violations += o.violations;
        self.relaxed.extend(o.relaxed);
        self.oracle_above_half.extend(o.oracle_above_half);
        self.fallbacks += o.fallbacks;
        self.firings += o.firings;
        for (k, v) in o.rule_histogram {
            *self.rule_histogram.entry(k).or_default() += v;
        }
        for v in o.violation_list {
            if self.violation_list.len() < MAX_LISTED {
                self.violation_list.push(v);
            }
        }
    }

    /// The exceptional graphs are exactly the ones above ⌊n/2⌋, and nothing
    /// else went wrong.
    pub fn clean(&self) -> bool {
        self.violations == 0 && self.relaxed == self.oracle_above_half && self.meets_bound == self.count
    }
}

fn check_one(g: &Graph, mask: u64, opts: &Options, oracle: bool, out: &mut CensusSummary) {
    out.count += 1;
    let fail = |why: String, out: &mut CensusSummary| {
        out.violations += 1;
        if out.violation_list.len() < MAX_LISTED {
            out.violation_list.push(format!("{mask}: {why}"));
        }
    };
    let d = match decompose(g, opts) {
        Ok(d) => d,
        Err(e) => return fail(e.to_string(), out),
    };
    if d.relaxed {
        out.relaxed.push(mask);
    }
    if d.meets_bound {
        out.meets_bound += 1;
    } else {
        fail(format!("{} colors", d.coloring.num_colors()), out);
    }
    if !verify_good_coloring(g, &d.coloring, d.relaxed).is_ok_and(|r| r.ok) && d.meets_bound {
        fail("verifier disagrees with the engine".into(), out);
    }
    if d.relaxed != (classify_exception(g) != Exception::Other) {
        fail("relaxed flag on a non-exceptional graph".into(), out);
    }
    out.fallbacks += usize::from(d.trace.fallbacks() > 0);
    for s in d.trace.firings() {
        out.firings += 1;
        *out.rule_histogram.entry(s.rule_id.clone()).or_default() += 1;
        if !s.checks.is_some_and(|c| c.all()) {
            fail(format!("firing {} broke the contract", s.rule_id), out);
        }
    }
    if oracle {
        match min_path_decomposition(g, opts.oracle_budget) {
            Ok(r) => {
                if r.min_paths > g.n() / 2 {
                    out.oracle_above_half.push(mask);
                }
                if d.coloring.num_colors() < r.min_paths {
                    fail("fewer colors than the oracle minimum".into(), out);
                }
            }
            Err(e) => fail(format!("oracle: {e}"), out),
        }
    }
}

/// Decomposes every labeled connected planar graph on `n` vertices and
/// compares each result with the exact oracle (skipped when `oracle` is
/// false). Graphs are identified by their edge mask.
pub fn run(n: usize, opts: &Options, oracle: bool, jobs: usize) -> CensusSummary {
    assert!((1..=7).contains(&n), "the census covers 1 to 7 vertices");
    let total: u64 = 1 << (n * (n - 1) / 2);
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let parts: Vec<CensusSummary> = crate::with_jobs(jobs, || {
        chunks
            .par_iter()
            .map(|&i| {
                let mut part = CensusSummary::default();
                let end = ((i + 1) * CHUNK).min(total);
                for (mask, g) in ConnectedPlanar::range(n, i * CHUNK, end) {
                    check_one(&g, mask, opts, oracle, &mut part);
                }
                part
            })
            .collect()
    });
    let mut summary = CensusSummary {
        n,
        ..CensusSummary::default()
    };
    for p in parts {
        summary.absorb(p);
    }
    summary
}
