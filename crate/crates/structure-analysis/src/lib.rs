//! Every connected planar graph on at least three vertices has two vertices
//! of degree at most 4 (a CI pair) or four degree-5 vertices with respect to
//! which it is almost 4-connected (a CII family). This crate finds one.

mod almost;
mod contraction;

pub use almost::{is_almost_4_connected, CutWitness, SmallCuts};
pub use contraction::{euler_excess, minimal_2_contraction, start_vertex, Contraction};

use graph_core::{connectivity_at_most, for_each_subset, Graph};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConfigurationKind {
    CI,
    CII,
}

/// How a CII family was obtained and checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub contraction: Contraction,
    pub contraction_3_connected: bool,
    pub contraction_4_connected: bool,
    /// The 3-cut of the contraction and the part the family was taken from.
    pub interior: Option<(Vec<usize>, Vec<usize>)>,
    /// Families rejected before the returned one passed.
    pub rejected: usize,
    /// Cuts of size at most 3 in `g` the family was checked against.
    pub cuts_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationWitness {
    pub kind: ConfigurationKind,
    pub ci_pair: Option<(usize, usize)>,
    pub four_family: Option<[usize; 4]>,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("input must be connected with at least 3 vertices")]
    InvalidInput,
    #[error("no CI pair and no certified CII family found")]
    NotFound,
}

/// Two distinct vertices of degree at most 4, the smallest ones under the
/// order (degree, id), returned in increasing id order.
pub fn find_ci(g: &Graph) -> Option<(usize, usize)> {
    let mut low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) <= 4).collect();
    low.sort_by_key(|&v| (g.degree(v), v));
    let (a, b) = (*low.first()?, *low.get(1)?);
    Some((a.min(b), a.max(b)))
}

/// A 3-cut of the contraction and the part behind it, in vertex ids of `g`.
type Interior = (Vec<usize>, Vec<usize>);

/// Upper limit on the 4-subsets tried by the last-resort scan.
const SCAN_LIMIT: usize = 50_000;

pub fn find_configuration(g: &Graph) -> Result<ConfigurationWitness, StructureError> {
    if g.n() < 3 || !g.is_connected() {
        return Err(StructureError::InvalidInput);
    }
    if let Some(pair) = find_ci(g) {
        return Ok(ConfigurationWitness {
            kind: ConfigurationKind::CI,
            ci_pair: Some(pair),
            four_family: None,
            certificate: None,
        });
    }
    let contraction = minimal_2_contraction(g);
    let (h, map) = contraction.graph(g);
    let h_cuts = SmallCuts::new(&h);
    let three_connected = connectivity_at_most(&h, 2) >= 3;
    let four_connected = h_cuts.is_empty();
    let g_cuts = SmallCuts::new(g);
    let cuts_checked = g_cuts.len();
    let mut rejected = 0;
    let mut certified = |family: &[usize]| -> bool {
        let ok = g_cuts.check(g, family).is_ok();
        if !ok {
            rejected += 1;
        }
        ok
    };

    let deg5 = |v: usize| !contraction.is_damaged(map[v]) && h.degree(v) == 5;
    let mut found: Option<([usize; 4], Option<Interior>)> = None;
    if four_connected {
        let mut fives: Vec<usize> = (0..h.n()).filter(|&v| deg5(v)).map(|v| map[v]).collect();
        fives.sort_unstable();
        if fives.len() >= 4 && certified(&fives[..4]) {
            found = Some(([fives[0], fives[1], fives[2], fives[3]], None));
        }
    } else {
        for (cut, part) in interiors(&h, &h_cuts, &contraction, &map) {
            let mut fives: Vec<usize> = part.iter().copied().filter(|&v| deg5(v)).map(|v| map[v]).collect();
            fives.sort_unstable();
            if fives.len() >= 4 && certified(&fives[..4]) {
                let back = |s: &[usize]| {
                    let mut o: Vec<usize> = s.iter().map(|&v| map[v]).collect();
                    o.sort_unstable();
                    o
                };
                found = Some((
                    [fives[0], fives[1], fives[2], fives[3]],
                    Some((back(&cut), back(&part))),
                ));
                break;
            }
        }
    }
    if found.is_none() {
        let fives: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 5).collect();
        let mut tried = 0;
        for_each_subset(fives.len(), 4, |idx| {
            if idx.len() < 4 {
                return true;
            }
            tried += 1;
            let family: Vec<usize> = idx.iter().map(|&i| fives[i]).collect();
            if certified(&family) {
                found = Some(([family[0], family[1], family[2], family[3]], None));
                return false;
            }
            tried < SCAN_LIMIT
        });
    }
    let (family, interior) = found.ok_or(StructureError::NotFound)?;
    Ok(ConfigurationWitness {
        kind: ConfigurationKind::CII,
        ci_pair: None,
        four_family: Some(family),
        certificate: Some(Certificate {
            contraction,
            contraction_3_connected: three_connected,
            contraction_4_connected: four_connected,
            interior,
            rejected,
            cuts_checked,
        }),
    })
}

/// Candidate interiors of the 3-cuts of the contraction, smallest first.
///
/// A part containing a damaged vertex is never an interior. When both parts
/// are clean the damaged vertices lie in the cut; without an embedding to
/// tell the inner part from the outer one, both are offered.
fn interiors(
    h: &Graph,
    cuts: &SmallCuts,
    c: &Contraction,
    map: &[usize],
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for (cut, _) in cuts.three_cuts() {
        for part in h.components_avoiding(cut) {
            if part.iter().all(|&v| !c.is_damaged(map[v])) {
                out.push((cut.to_vec(), part));
            }
        }
    }
    out.sort_by(|a, b| (a.1.len(), &a.0, &a.1).cmp(&(b.1.len(), &b.0, &b.1)));
    out
}
