//! Batch drivers behind the `gallai` binary: the exhaustive census of small
//! graphs and the random fuzz run. Both are deterministic for fixed
//! arguments, whatever the number of worker threads.

pub mod census;
pub mod fuzz;

use rule_engine::Options;

/// Environment variable overriding the node budgets of the searches.
pub const NODE_BUDGET_ENV: &str = "GALLAI_NODE_BUDGET";

/// Engine options with the budget override applied.
pub fn engine_options(exact_threshold: Option<usize>) -> Result<Options, String> {
    let mut o = Options::default();
    if let Some(t) = exact_threshold {
        o.exact_threshold = t;
    }
    if let Ok(v) = std::env::var(NODE_BUDGET_ENV) {
        let b: u64 = v
            .parse()
            .map_err(|_| format!("{NODE_BUDGET_ENV} must be a non-negative integer, got {v:?}"))?;
        o.oracle_budget = b;
        o.search_budget = b;
    }
    Ok(o)
}

/// Runs `f` on a pool of `jobs` threads (0 means one per core).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}
