//! Subdivisions rooted on a 4-family: a K4 pattern (every pair of roots
//! joined once) or a C4+ pattern (a 4-cycle of roots whose two opposite
//! sides are doubled). The crate finds them, removes chords, runs the
//! redirection procedure, classifies the problems of the roots and 2-colors
//! the six paths.

mod coloring;
mod dot;
mod model;
mod problems;
mod redirect;
mod search;
mod validate;

pub use coloring::{all_two_colorings, two_color, Color, InactivationTarget, SubdivisionColoring};
pub use dot::to_dot;
pub use model::{Contact, Kind, Subdivision};
pub use problems::{
    check_properties, classify_problems, root_patterns, DistantProblem, Pattern, ProblemReport,
    Properties, PropertyWitness, RootPattern,
};
pub use redirect::{find_redirection, redirect, routing, Redirection, RedirectionStep};
pub use validate::{star_violations, validate_subdivision, SubdivisionReport};

use graph_core::Graph;
use search::PathSystem;

pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

/// Redirections beyond this count mean the termination argument failed.
pub const MAX_REDIRECTIONS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SubdivisionError {
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("no K4 or C4+ subdivision rooted on {roots:?}")]
    NotFound { roots: [usize; 4] },
    #[error("root {root} forms a K4 with neighbors {others:?}")]
    InducedK4Violation { root: usize, others: [usize; 3] },
    #[error("routing guard failed at root {root}: {reason}")]
    GuardFailure { root: usize, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("redirection did not terminate after {0} steps")]
    RedirectionLoop(usize),
    #[error("no 2-coloring satisfies the constraints: {0}")]
    Unsatisfiable(String),
}

fn k4_slots(r: &[usize; 4]) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            slots.push((r[i], r[j]));
        }
    }
    slots
}

/// Slot lists for the six C4+ incidence patterns on `r`. The doubled pairs
/// form one perfect matching of the roots and the single pairs another.
fn c4plus_patterns(r: &[usize; 4]) -> Vec<Vec<(usize, usize)>> {
    let matchings = [
        [(r[0], r[1]), (r[2], r[3])],
        [(r[0], r[2]), (r[1], r[3])],
        [(r[0], r[3]), (r[1], r[2])],
    ];
    let mut out = Vec::new();
    for (d, doubled) in matchings.iter().enumerate() {
        for (s, single) in matchings.iter().enumerate() {
            if s == d {
                continue;
            }
            let mut slots = Vec::new();
            for &p in doubled {
                slots.push(p);
                slots.push(p);
            }
            slots.extend(single.iter().copied());
            out.push(slots);
        }
    }
    out
}

/// A K4-subdivision rooted on `u`, or `None` once the search space is
/// exhausted.
pub fn find_rooted_k4(
    g: &Graph,
    u: [usize; 4],
    budget: u64,
) -> Result<Option<Subdivision>, SubdivisionError> {
    let mut found = None;
    PathSystem::new(g, &u, k4_slots(&u), budget, |paths: &[Vec<usize>]| {
        found = Some(paths.to_vec());
        true
    })
    .run()?;
    Ok(found.map(|paths| Subdivision::new(Kind::K4, u, paths)))
}

/// A chordless K4- or C4+*-subdivision rooted on `u`. The K4 pattern is
/// preferred; C4+ is searched only when no rooted K4 exists.
pub fn find_k_subdivision(
    g: &Graph,
    u: [usize; 4],
    budget: u64,
) -> Result<Subdivision, SubdivisionError> {
    if let Some(s) = find_rooted_k4(g, u, budget)? {
        return Ok(eliminate_chords(g, &s));
    }
    for slots in c4plus_patterns(&u) {
        let mut found = None;
        PathSystem::new(g, &u, slots, budget, |paths: &[Vec<usize>]| {
            let mut s = eliminate_chords(g, &Subdivision::new(Kind::C4Plus, u, paths.to_vec()));
            if star_violations(g, &s).is_empty() {
                s.star = true;
                found = Some(s);
                true
            } else {
                false
            }
        })
        .run()?;
        if let Some(s) = found {
            return Ok(s);
        }
    }
    Err(SubdivisionError::NotFound { roots: u })
}

/// The first chord of path `i` in scan order, as positions (p, q), p < q - 1.
fn first_chord(g: &Graph, s: &Subdivision, i: usize) -> Option<(usize, usize)> {
    let p = &s.paths[i];
    for a in 0..p.len() {
        for b in (a + 2..p.len()).rev() {
            if g.has_edge(p[a], p[b]) && !exempt(s, i, p[a], p[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A root-to-root chord that is itself another path of S stays.
fn exempt(s: &Subdivision, i: usize, x: usize, y: usize) -> bool {
    s.is_root(x)
        && s.is_root(y)
        && (0..s.paths.len()).any(|j| {
            j != i && s.paths[j].len() == 2 && {
                let (a, b) = s.ends(j);
                (a == x && b == y) || (a == y && b == x)
            }
        })
}

/// Shortcuts every chord of every path until none is left.
pub fn eliminate_chords(g: &Graph, s: &Subdivision) -> Subdivision {
    let mut out = s.clone();
    loop {
        let hit = (0..out.paths.len()).find_map(|i| first_chord(g, &out, i).map(|c| (i, c)));
        let Some((i, (a, b))) = hit else { break };
        let p = &mut out.paths[i];
        p.drain(a + 1..b);
    }
    out
}
