//! Subset valencies and isoregularity.

mod local;
mod tvertex;
mod types;

pub use local::{
    d_partition, edge_iso_params, expected_cell_sizes, is_locally_3isoregular_at, nonedge_iso_params, DPartition,
    EdgeLocalParams, LocalReport, NonEdgeLocalParams,
};
pub use tvertex::{subconstituent_characterization, t_vertex_condition, PairClass, TVertexReport, TVertexWitness};
pub use types::{iso_type, IsoType};

use crate::error::{invalid_arg, Result};
use crate::graph::{encode_graph6, popcount, Graph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use types::{check_distinct, raw_code};

/// Number of vertices adjacent to every vertex of `set`.
pub fn subset_valency(g: &Graph, set: &[usize]) -> Result<usize> {
    if set.is_empty() {
        return Err(invalid_arg("valency of the empty set is undefined"));
    }
    check_distinct(g, set)?;
    Ok(g.common_neighbors_of(set))
}

/// Calls `f` on every `j`-subset of `0..n` in lexicographic order; stops when `f` returns false.
pub(crate) fn for_each_subset(n: usize, j: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if j > n {
        return;
    }
    let mut idx: Vec<usize> = (0..j).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..j).rev().find(|&i| idx[i] < n - j + i) else {
            return;
        };
        idx[i] += 1;
        for t in i + 1..j {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Valency of each iso type on at most `k` vertices.
///
/// Types that never occur are reported with valency 0 and listed in `vacuous`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoProfile {
    pub k: usize,
    pub valencies: BTreeMap<IsoType, usize>,
    pub vacuous: BTreeSet<IsoType>,
}

impl IsoProfile {
    pub fn valency(&self, t: IsoType) -> Option<usize> {
        self.valencies.get(&t).copied()
    }

    /// `(Q, R, W, V)`: valencies of `K3`, `K1,2`, `K2+K1`, `3K1`.
    pub fn size3(&self) -> Option<[usize; 4]> {
        let v = |t| self.valency(t);
        Some([v(IsoType::K3)?, v(IsoType::K12)?, v(IsoType::K2_K1)?, v(IsoType::THREE_K1)?])
    }
}

/// Two subsets of the same type with different valencies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub iso_type: IsoType,
    pub first: Vec<usize>,
    pub first_valency: usize,
    pub second: Vec<usize>,
    pub second_valency: usize,
}

/// Result of a full k-isoregularity scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoregReport {
    pub graph: String,
    pub k: usize,
    pub isoregular: bool,
    pub profile: Option<IsoProfile>,
    /// Lexicographically first violation: the earliest subset whose valency
    /// differs from the first subset of its type.
    pub witness: Option<IsoWitness>,
    /// First violation of each type that has one.
    pub violations: Vec<IsoWitness>,
    /// Every valency observed per type.
    pub observed: BTreeMap<IsoType, BTreeSet<usize>>,
}

struct Scan {
    first: BTreeMap<IsoType, (Vec<usize>, usize)>,
    observed: BTreeMap<IsoType, BTreeSet<usize>>,
    violations: BTreeMap<IsoType, (usize, IsoWitness)>,
    order: usize,
}

fn scan(g: &Graph, k: usize, stop_early: bool) -> Scan {
    let mut s = Scan { first: BTreeMap::new(), observed: BTreeMap::new(), violations: BTreeMap::new(), order: 0 };
    let mut acc = vec![0u64; g.row_words()];
    for j in 1..=k.min(g.order()) {
        let mut keep_going = true;
        for_each_subset(g.order(), j, |set| {
            acc.copy_from_slice(g.row(set[0]));
            for &v in &set[1..] {
                for (a, b) in acc.iter_mut().zip(g.row(v)) {
                    *a &= b;
                }
            }
            let valency = popcount(&acc);
            let t = IsoType::from_code(j, raw_code(g, set)).expect("size within 1..=4");
            s.observed.entry(t).or_default().insert(valency);
            s.order += 1;
            match s.first.get(&t) {
                None => {
                    s.first.insert(t, (set.to_vec(), valency));
                }
                Some((first, fv)) if *fv != valency && !s.violations.contains_key(&t) => {
                    let w = IsoWitness {
                        iso_type: t,
                        first: first.clone(),
                        first_valency: *fv,
                        second: set.to_vec(),
                        second_valency: valency,
                    };
                    s.violations.insert(t, (s.order, w));
                    if stop_early {
                        keep_going = false;
                    }
                }
                _ => {}
            }
            keep_going
        });
        if !keep_going {
            break;
        }
    }
    s
}

fn check_k(k: usize) -> Result<()> {
    if !(1..=4).contains(&k) {
        return Err(invalid_arg(format!("k must be in 1..=4, got {k}")));
    }
    Ok(())
}

fn profile_from(k: usize, first: &BTreeMap<IsoType, (Vec<usize>, usize)>) -> IsoProfile {
    let mut valencies = BTreeMap::new();
    let mut vacuous = BTreeSet::new();
    for j in 1..=k {
        for t in IsoType::all(j) {
            match first.get(&t) {
                Some((_, v)) => {
                    valencies.insert(t, *v);
                }
                None => {
                    valencies.insert(t, 0);
                    vacuous.insert(t);
                }
            }
        }
    }
    IsoProfile { k, valencies, vacuous }
}

/// Full scan of all subsets of size at most `k`.
pub fn is_k_isoregular(g: &Graph, k: usize) -> Result<IsoregReport> {
    check_k(k)?;
    let s = scan(g, k, false);
    let mut violations: Vec<(usize, IsoWitness)> = s.violations.into_values().collect();
    violations.sort_by_key(|(order, _)| *order);
    let violations: Vec<IsoWitness> = violations.into_iter().map(|(_, w)| w).collect();
    let isoregular = violations.is_empty();
    Ok(IsoregReport {
        graph: encode_graph6(g),
        k,
        isoregular,
        profile: isoregular.then(|| profile_from(k, &s.first)),
        witness: violations.first().cloned(),
        violations,
        observed: s.observed,
    })
}

/// Early-exit variant of [`is_k_isoregular`] returning only the verdict.
pub fn quick_k_isoregular(g: &Graph, k: usize) -> Result<bool> {
    check_k(k)?;
    Ok(scan(g, k, true).violations.is_empty())
}

/// The type-to-valency map when `g` is `k`-isoregular.
pub fn iso_profile(g: &Graph, k: usize) -> Result<Option<IsoProfile>> {
    check_k(k)?;
    let s = scan(g, k, true);
    Ok(s.violations.is_empty().then(|| profile_from(k, &s.first)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{triangular_pairs, NamedGraph};

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(13, 6, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1716);
    }

    #[test]
    fn petersen_pair_labelled_valencies() {
        // Kneser graph on 2-subsets of {1..5}: disjoint pairs are adjacent
        let pairs = triangular_pairs(5);
        let g = Graph::from_fn(10, |i, j| {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            a != c && a != d && b != c && b != d
        })
        .unwrap();
        let label = |a, b| pairs.iter().position(|&p| p == (a, b)).unwrap();
        assert_eq!(subset_valency(&g, &[label(1, 2), label(1, 3), label(2, 3)]).unwrap(), 1);
        assert_eq!(subset_valency(&g, &[label(1, 2), label(1, 3), label(1, 4)]).unwrap(), 0);
        assert!(subset_valency(&g, &[]).is_err());
    }

    #[test]
    fn clebsch_profile() {
        let g = NamedGraph::Clebsch.build().unwrap();
        let p = iso_profile(&g, 3).unwrap().unwrap();
        assert_eq!(p.size3(), Some([0, 0, 0, 1]));
        assert!(p.vacuous.contains(&IsoType::K3));
    }

    #[test]
    fn shrikhande_witness() {
        let g = NamedGraph::ShrikhandeA.build().unwrap();
        let r = is_k_isoregular(&g, 3).unwrap();
        assert!(!r.isoregular);
        let w = r.violations.iter().find(|w| w.iso_type == IsoType::K12).unwrap();
        let mut vals = [w.first_valency, w.second_valency];
        vals.sort_unstable();
        assert_eq!(vals, [0, 1]);
        assert_eq!(r.observed[&IsoType::K12], BTreeSet::from([0, 1]));
    }

    #[test]
    fn k_range() {
        let g = NamedGraph::C5.build().unwrap();
        assert!(is_k_isoregular(&g, 0).is_err());
        assert!(is_k_isoregular(&g, 5).is_err());
        assert!(quick_k_isoregular(&g, 3).unwrap());
    }
}
