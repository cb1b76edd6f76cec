//! The t-vertex condition and the subconstituent characterization of 3-isoregularity.

use super::for_each_subset;
use super::types::{pair_bit, permutations};
use crate::error::{invalid_arg, Result};
use crate::graph::Graph;
use crate::srg::{is_nontrivial_srg, srg_params, subconstituent, SrgParams};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    Equal,
    Adjacent,
    NonAdjacent,
}

/// A rooted subgraph type: size and minimum code with the roots held in the first positions.
type RootedType = (usize, u8);
/// Rooted-type counts of one ordered pair.
type PairCounts = ((usize, usize), BTreeMap<RootedType, usize>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TVertexWitness {
    pub class: PairClass,
    pub size: usize,
    pub rooted_code: u8,
    pub reference: (usize, usize),
    pub reference_count: usize,
    pub pair: (usize, usize),
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TVertexReport {
    pub t: usize,
    pub holds: bool,
    pub witness: Option<TVertexWitness>,
}

struct Rooting {
    /// `perms[m]`: permutations of `m` non-root positions.
    perms: Vec<Vec<Vec<usize>>>,
}

impl Rooting {
    fn new() -> Self {
        Rooting { perms: (0..=3).map(permutations).collect() }
    }

    fn code(&self, g: &Graph, roots: &[usize], rest: &[usize], scratch: &mut Vec<usize>) -> u8 {
        let mut best = u8::MAX;
        for perm in &self.perms[rest.len()] {
            scratch.clear();
            scratch.extend_from_slice(roots);
            scratch.extend(perm.iter().map(|&i| rest[i]));
            let mut code = 0u8;
            for b in 1..scratch.len() {
                for a in 0..b {
                    if g.has_edge(scratch[a], scratch[b]) {
                        code |= 1 << pair_bit(a, b);
                    }
                }
            }
            best = best.min(code);
        }
        best
    }
}

/// Counts of rooted `j`-vertex subgraphs (`j ≤ t`) through the ordered pair `(u, v)`.
fn rooted_counts(g: &Graph, u: usize, v: usize, t: usize, rooting: &Rooting) -> BTreeMap<RootedType, usize> {
    let roots: Vec<usize> = if u == v { vec![u] } else { vec![u, v] };
    let others: Vec<usize> = (0..g.order()).filter(|w| !roots.contains(w)).collect();
    let mut counts = BTreeMap::new();
    let mut scratch = Vec::with_capacity(4);
    let mut rest = Vec::with_capacity(4);
    for j in roots.len()..=t {
        for_each_subset(others.len(), j - roots.len(), |idx| {
            rest.clear();
            rest.extend(idx.iter().map(|&i| others[i]));
            let code = rooting.code(g, &roots, &rest, &mut scratch);
            *counts.entry((j, code)).or_insert(0) += 1;
            true
        });
    }
    counts
}

/// Whether the number of rooted `j`-vertex subgraphs of each type through an
/// ordered pair depends only on the pair being equal, adjacent or non-adjacent, for all `j ≤ t`.
pub fn t_vertex_condition(g: &Graph, t: usize) -> Result<TVertexReport> {
    if !(2..=4).contains(&t) {
        return Err(invalid_arg(format!("t must be in 2..=4, got {t}")));
    }
    let rooting = Rooting::new();
    let mut reference: BTreeMap<PairClass, PairCounts> = BTreeMap::new();
    for u in 0..g.order() {
        for v in 0..g.order() {
            let class = match (u == v, g.has_edge(u, v)) {
                (true, _) => PairClass::Equal,
                (false, true) => PairClass::Adjacent,
                (false, false) => PairClass::NonAdjacent,
            };
            let counts = rooted_counts(g, u, v, t, &rooting);
            match reference.get(&class) {
                None => {
                    reference.insert(class, ((u, v), counts));
                }
                Some((pair, expected)) if *expected != counts => {
                    let keys = expected.keys().chain(counts.keys());
                    let (size, code) = *keys
                        .filter(|key| expected.get(key) != counts.get(key))
                        .min()
                        .expect("maps differ");
                    let witness = TVertexWitness {
                        class,
                        size,
                        rooted_code: code,
                        reference: *pair,
                        reference_count: expected.get(&(size, code)).copied().unwrap_or(0),
                        pair: (u, v),
                        count: counts.get(&(size, code)).copied().unwrap_or(0),
                    };
                    return Ok(TVertexReport { t, holds: false, witness: Some(witness) });
                }
                _ => {}
            }
        }
    }
    Ok(TVertexReport { t, holds: true, witness: None })
}

fn params_allow_small(g: &Graph) -> Option<SrgParams> {
    if g.order() == 1 {
        return Some(SrgParams::new(1, 0, 0, 0));
    }
    srg_params(g)
}

/// Whether the first and second subconstituents of every vertex are strongly
/// regular with parameters independent of the vertex.
pub fn subconstituent_characterization(g: &Graph) -> Result<bool> {
    if !is_nontrivial_srg(g) {
        return Err(invalid_arg("subconstituent characterization needs a nontrivial strongly regular graph"));
    }
    let mut expected: Option<[SrgParams; 2]> = None;
    for v in 0..g.order() {
        let mut pair = [SrgParams::new(0, 0, 0, 0); 2];
        for (slot, i) in pair.iter_mut().zip([1, 2]) {
            match params_allow_small(&subconstituent(g, v, i)?) {
                Some(p) => *slot = p,
                None => return Ok(false),
            }
        }
        match expected {
            None => expected = Some(pair),
            Some(e) if e != pair => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, NamedGraph};

    #[test]
    fn two_vertex_condition_is_regularity() {
        assert!(t_vertex_condition(&cycle(7).unwrap(), 2).unwrap().holds);
        assert!(!t_vertex_condition(&path(4).unwrap(), 2).unwrap().holds);
    }

    #[test]
    fn three_vertex_condition_needs_srg() {
        assert!(t_vertex_condition(&cycle(5).unwrap(), 3).unwrap().holds);
        let r = t_vertex_condition(&cycle(6).unwrap(), 3).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().class, PairClass::NonAdjacent);
        assert!(t_vertex_condition(&cycle(6).unwrap(), 5).is_err());
    }

    #[test]
    fn characterization_examples() {
        assert!(subconstituent_characterization(&NamedGraph::Clebsch.build().unwrap()).unwrap());
        assert!(!subconstituent_characterization(&NamedGraph::Paley(13).build().unwrap()).unwrap());
        assert!(subconstituent_characterization(&path(3).unwrap()).is_err());
    }
}
