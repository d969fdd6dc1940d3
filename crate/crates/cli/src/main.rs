//! `gallai`: decompose planar graphs into paths, check decompositions, and
//! run the census and fuzz corpora.
//!
//! Exit codes: 0 success, 1 bad input, 2 the engine missed the bound (or a
//! corpus run found failures), 3 a checked decomposition is invalid.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use decomp_model::{verify_good_coloring, DecompositionJson, EdgeColoring, ModelError};
use gallai_cli::fuzz::{Corpus, FuzzConfig};
use gallai_cli::{census, engine_options, fuzz};
use graph_core::{classify_exception, parse_edge_list, parse_graph, parse_graph6, to_dot, Exception, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rule_engine::decompose;

const EXIT_INPUT: u8 = 1;
const EXIT_SOFT: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(name = "gallai", version, about = "Path decompositions of planar graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Auto,
    Edges,
    Graph6,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose a connected planar graph into at most ⌊n/2⌋ paths.
    Decompose {
        /// Graph file; stdin when absent or "-".
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// One JSON object with the paths, the verdict and the trace.
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// DOT output with one color per path.
        #[arg(long)]
        dot: bool,
        /// Graphs up to this order go straight to the exact oracle.
        #[arg(long)]
        exact_threshold: Option<usize>,
        /// Relabels the vertices at random before decomposing.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a decomposition (JSON with "paths") against a graph.
    Verify {
        graph: PathBuf,
        /// Decomposition file; "-" for stdin.
        decomposition: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Run the engine and the oracle on every labeled connected planar
    /// graph with n vertices.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        n: u8,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        exact_threshold: Option<usize>,
        /// Skip the oracle comparison.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Decompose random planar graphs with every check on.
    Fuzz {
        /// Vertex range, as "lo..hi" (inclusive) or "n".
        #[arg(long, default_value = "8..40", value_parser = parse_range)]
        n_range: (usize, usize),
        /// Edges per vertex aimed at by the planar corpus.
        #[arg(long, default_value_t = 2.0)]
        m_density: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "planar")]
        corpus: Corpus,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for reproducers of failing instances.
        #[arg(long, default_value = "gallai-repro")]
        out_dir: PathBuf,
        #[arg(long)]
        exact_threshold: Option<usize>,
        /// Print one JSON line per instance before the summary.
        #[arg(long)]
        lines: bool,
        #[arg(long, hide = true)]
        inject_bug: bool,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
    if lo > hi || lo == 0 {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("gallai: {msg}");
    ExitCode::from(code)
}

fn read_text(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&PathBuf>, format: Format) -> Result<Graph, String> {
    let text = read_text(path).map_err(|e| e.to_string())?;
    let g = match format {
        Format::Auto => parse_graph(&text),
        Format::Edges => parse_edge_list(&text),
        Format::Graph6 => parse_graph6(text.trim()),
    };
    g.map_err(|e| e.to_string())
}

fn cmd_decompose(
    input: Option<PathBuf>,
    format: Format,
    json: bool,
    dot: bool,
    exact_threshold: Option<usize>,
    seed: Option<u64>,
) -> ExitCode {
    let g = match read_graph(input.as_ref(), format) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let opts = match engine_options(exact_threshold) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let (work, back) = match seed {
        Some(s) => {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(s));
            let mut inv = vec![0; g.n()];
            for (v, &p) in perm.iter().enumerate() {
                inv[p] = v;
            }
            let h = Graph::from_edges(g.n(), g.edges().iter().map(|&(a, b)| (perm[a], perm[b]))).expect("same graph");
            (h, Some(inv))
        }
        None => (g.clone(), None),
    };
    let d = match decompose(&work, &opts) {
        Ok(d) => d,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let coloring = match &back {
        Some(inv) => d.coloring.relabeled(inv),
        None => d.coloring.clone(),
    };
    let bound = if d.relaxed { g.n().div_ceil(2) } else { g.n() / 2 };
    let wire = DecompositionJson::from_coloring(&g, &coloring, d.relaxed);
    if json {
        let out = serde_json::json!({
            "n": wire.n,
            "m": g.m(),
            "paths": wire.paths,
            "relaxed_budget": wire.relaxed_budget,
            "colors": coloring.num_colors(),
            "bound": bound,
            "meets_bound": d.meets_bound,
            "fallbacks": d.trace.fallbacks(),
            "trace": d.trace,
        });
        println!("{out}");
    } else if dot {
        print!(
            "{}",
            to_dot(&g, |a, b| coloring.color_of(a, b).map(|c| format!("label=\"{c}\", colorscheme=set19, color={}", c % 9 + 1)))
        );
    } else {
        for (i, p) in wire.paths.iter().enumerate() {
            let seq: Vec<String> = p.iter().map(ToString::to_string).collect();
            println!("path {i}: {}", seq.join(" "));
        }
        let relaxed = if d.relaxed { " (relaxed)" } else { "" };
        let verdict = if d.meets_bound { "ok" } else { "over the bound" };
        println!("{} paths, bound {bound}{relaxed}: {verdict}", coloring.num_colors());
    }
    if d.meets_bound {
        ExitCode::SUCCESS
    } else {
        for s in d.trace.steps.iter().filter(|s| s.fallback.is_some()) {
            eprintln!("fallback at n={}: {}", s.n, s.fallback.as_deref().unwrap_or(""));
        }
        fail(EXIT_SOFT, format!("{} paths exceed the bound {bound}", coloring.num_colors()))
    }
}

fn cmd_verify(graph: PathBuf, decomposition: PathBuf, format: Format) -> ExitCode {
    let g = match read_graph(Some(&graph), format) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let text = match read_text(Some(&decomposition)) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let wire = match DecompositionJson::parse(&text) {
        Ok(w) => w,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if wire.n != g.n() {
        return fail(EXIT_INPUT, format!("decomposition is for {} vertices, graph has {}", wire.n, g.n()));
    }
    let c: EdgeColoring = match wire.to_coloring() {
        Ok(c) => c,
        Err(ModelError::EdgeColoredTwice(e)) => {
            println!("edge {}-{} is on two paths", e.0, e.1);
            return ExitCode::from(EXIT_INVALID);
        }
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let relaxed = classify_exception(&g) != Exception::Other;
    match verify_good_coloring(&g, &c, relaxed) {
        Ok(r) if r.ok => {
            println!("ok: {} paths, budget {}", r.color_count, r.budget.unwrap_or(0));
            ExitCode::SUCCESS
        }
        Ok(r) => {
            for v in &r.violations {
                println!("{v}");
            }
            ExitCode::from(EXIT_INVALID)
        }
        Err(e) => fail(EXIT_INPUT, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Decompose {
            input,
            format,
            json,
            dot,
            exact_threshold,
            seed,
        } => cmd_decompose(input, format, json, dot, exact_threshold, seed),
        Cmd::Verify {
            graph,
            decomposition,
            format,
        } => cmd_verify(graph, decomposition, format),
        Cmd::Census {
            n,
            jobs,
            exact_threshold,
            no_oracle,
        } => {
            let opts = match engine_options(exact_threshold) {
                Ok(o) => o,
                Err(e) => return fail(EXIT_INPUT, e),
            };
            let s = census::run(n as usize, &opts, !no_oracle, jobs);
            println!("{}", serde_json::to_string(&s).expect("serializes"));
            if s.violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_SOFT)
            }
        }
        Cmd::Fuzz {
            n_range,
            m_density,
            count,
            seed,
            corpus,
            jobs,
            out_dir,
            exact_threshold,
            lines,
            inject_bug,
        } => {
            let opts = match engine_options(exact_threshold) {
                Ok(o) => o,
                Err(e) => return fail(EXIT_INPUT, e),
            };
            let cfg = FuzzConfig {
                n_min: n_range.0,
                n_max: n_range.1,
                m_density,
                count,
                seed,
                corpus,
                out_dir: Some(out_dir),
                inject_bug,
            };
            match fuzz::run_with_lines(&cfg, &opts, jobs) {
                Ok((s, per_instance)) => {
                    if lines {
                        for l in &per_instance {
                            println!("{}", serde_json::to_string(l).expect("serializes"));
                        }
                    }
                    println!("{}", serde_json::to_string(&s).expect("serializes"));
                    if s.failures == 0 {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_SOFT)
                    }
                }
                Err(e) => fail(EXIT_INPUT, e),
            }
        }
    }
}
