use graph_core::{for_each_subset, Graph};
use serde::Serialize;

/// A cut of size at most 3 that breaks almost 4-connectivity, with the two
/// vertices it separates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    pub cut: Vec<usize>,
    pub separated: (usize, usize),
    /// Set when the separated pair are neighbors of this member of the cut.
    pub around: Option<usize>,
}

/// All vertex cuts of size at most 3, each with the component label of every
/// vertex outside it. Built once, then queried for many candidate families.
pub struct SmallCuts {
    cuts: Vec<(Vec<usize>, Vec<u32>)>,
}

const IN_CUT: u32 = u32::MAX;

impl SmallCuts {
    pub fn new(g: &Graph) -> Self {
        let mut cuts = Vec::new();
        for_each_subset(g.n(), 3, |set| {
            let comps = g.components_avoiding(set);
            if comps.len() >= 2 {
                let mut label = vec![IN_CUT; g.n()];
                for (i, c) in comps.iter().enumerate() {
                    for &v in c {
                        label[v] = i as u32;
                    }
                }
                cuts.push((set.to_vec(), label));
            }
            true
        });
        SmallCuts { cuts }
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    /// The three-cuts in lexicographic order with the components they leave.
    pub fn three_cuts(&self) -> impl Iterator<Item = (&[usize], &[u32])> {
        self.cuts
            .iter()
            .filter(|(c, _)| c.len() == 3)
            .map(|(c, l)| (c.as_slice(), l.as_slice()))
    }

    pub fn check(&self, g: &Graph, u: &[usize]) -> Result<(), CutWitness> {
        for (cut, label) in &self.cuts {
            let outside: Vec<usize> = u.iter().copied().filter(|&x| label[x] != IN_CUT).collect();
            for w in outside.windows(2) {
                if label[w[0]] != label[w[1]] {
                    return Err(CutWitness {
                        cut: cut.clone(),
                        separated: (w[0], w[1]),
                        around: None,
                    });
                }
            }
            for &x in u.iter().filter(|&&x| label[x] == IN_CUT) {
                let nb: Vec<usize> = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&y| label[y] != IN_CUT)
                    .collect();
                if let Some(w) = nb.windows(2).find(|w| label[w[0]] != label[w[1]]) {
                    return Err(CutWitness {
                        cut: cut.clone(),
                        separated: (w[0], w[1]),
                        around: Some(x),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Whether no cut of size at most 3 separates two members of `u`, or two
/// neighbors of a member lying in the cut. Brute force over all such cuts.
pub fn is_almost_4_connected(g: &Graph, u: &[usize]) -> Result<(), CutWitness> {
    assert_eq!(u.len(), 4, "almost 4-connectivity is defined for four vertices");
    SmallCuts::new(g).check(g, u)
}
