//! Isomorphism classes of search survivors.

use super::{SearchResult, Survivor};
use crate::error::{invalid_arg, Result};
use crate::graph::{decode_graph6, is_isomorphic, Graph, GraphInvariant, NamedGraph, Symbol};
use crate::isoreg::IsoProfile;
use crate::srg::SrgParams;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClass {
    pub index: usize,
    /// First member in symbol order.
    pub representative: String,
    pub graph6: String,
    pub params: SrgParams,
    /// Number of surviving symbols in the class.
    pub members: usize,
    pub isoregular3: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<IsoProfile>,
    /// Class of the complementary graph, when it is among the survivors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<usize>,
    /// Matching named graph, e.g. `clebsch` or `complement(clebsch)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// Representatives bucketed by invariant.
struct Index {
    reps: Vec<Graph>,
    buckets: HashMap<GraphInvariant, Vec<usize>>,
}

impl Index {
    fn new() -> Self {
        Index { reps: Vec::new(), buckets: HashMap::new() }
    }

    fn find(&self, inv: &GraphInvariant, g: &Graph) -> Option<usize> {
        self.buckets.get(inv)?.iter().copied().find(|&c| is_isomorphic(&self.reps[c], g).is_some())
    }

    fn insert(&mut self, inv: GraphInvariant, g: Graph) -> usize {
        let c = self.reps.len();
        self.reps.push(g);
        self.buckets.entry(inv).or_default().push(c);
        c
    }

    fn from_classes(classes: &[IsoClass]) -> Result<Self> {
        let mut index = Index::new();
        for c in classes {
            let g = decode_graph6(&c.graph6)?;
            index.insert(GraphInvariant::of(&g), g);
        }
        Ok(index)
    }
}

fn corpus_name(g: &Graph) -> Option<String> {
    let comp = g.complement();
    NamedGraph::CORPUS.into_iter().find_map(|tag| {
        let h = tag.build().ok()?;
        if h.order() != g.order() {
            return None;
        }
        if h.edge_count() == g.edge_count() && is_isomorphic(&h, g).is_some() {
            Some(tag.to_string())
        } else if h.edge_count() == comp.edge_count() && is_isomorphic(&h, &comp).is_some() {
            Some(format!("complement({tag})"))
        } else {
            None
        }
    })
}

/// Assigns every survivor to a class; classes are numbered by first appearance.
pub(super) fn classify(graphs: &[Graph], survivors: &[Survivor]) -> (Vec<usize>, Vec<IsoClass>) {
    let invariants: Vec<GraphInvariant> = graphs.par_iter().map(GraphInvariant::of).collect();
    let mut index = Index::new();
    let mut classes: Vec<IsoClass> = Vec::new();
    let mut assign = Vec::with_capacity(graphs.len());
    for ((g, inv), s) in graphs.iter().zip(invariants).zip(survivors) {
        let c = match index.find(&inv, g) {
            Some(c) => c,
            None => {
                let c = index.insert(inv, g.clone());
                classes.push(IsoClass {
                    index: c,
                    representative: s.symbol.clone(),
                    graph6: s.graph6.clone(),
                    params: s.params,
                    members: 0,
                    isoregular3: s.isoregular3,
                    profile: s.profile.clone(),
                    complement: None,
                    name: None,
                });
                c
            }
        };
        classes[c].members += 1;
        assign.push(c);
    }
    let extra: Vec<(Option<usize>, Option<String>)> = index
        .reps
        .par_iter()
        .map(|g| {
            let comp = g.complement();
            (index.find(&GraphInvariant::of(&comp), &comp), corpus_name(g))
        })
        .collect();
    for (c, (comp, name)) in classes.iter_mut().zip(extra) {
        c.complement = comp;
        c.name = name;
    }
    (assign, classes)
}

/// Number of classes after identifying each class with its complement's.
pub(super) fn complement_class_count(classes: &[IsoClass]) -> usize {
    classes.iter().filter(|c| c.complement.is_none_or(|o| o >= c.index)).count()
}

pub(super) fn find_class(classes: &[IsoClass], g: &Graph) -> Option<usize> {
    let index = Index::from_classes(classes).ok()?;
    index.find(&GraphInvariant::of(g), g)
}

/// Applies translation, every multiplier, the orbit swap and (for runs without
/// parameter or cardinality constraints) complementation to every bicirculant
/// survivor, and reports images whose class is missing from the result.
pub fn closure_violations(result: &SearchResult) -> Result<Vec<String>> {
    if result.spec.orbits != 2 || !result.spec.dedup {
        return Err(invalid_arg("closure checks need a deduplicated bicirculant result"));
    }
    let spec = &result.spec;
    let with_complement =
        spec.target.is_none() && spec.s_size.is_none() && spec.sp_size.is_none() && spec.t_size.is_none();
    let index = Index::from_classes(&result.classes)?;
    let n = spec.n;
    let units: Vec<usize> = (2..n).filter(|&a| num_integer::gcd(a, n) == 1).collect();
    let failures: Vec<Vec<String>> = result
        .survivors
        .par_iter()
        .map(|s| {
            let mut out = Vec::new();
            let Ok(Symbol::Bi(b)) = s.symbol.parse::<Symbol>() else {
                out.push(format!("{}: not a bicirculant symbol", s.symbol));
                return out;
            };
            let mut images = vec![("translation", b.translated(1)), ("swap", b.swapped())];
            images.extend(units.iter().map(|&a| ("multiplier", b.scaled(a))));
            if with_complement {
                images.push(("complement", b.complemented()));
            }
            for (what, img) in images {
                let found = Symbol::Bi(img.clone())
                    .build()
                    .ok()
                    .and_then(|g| index.find(&GraphInvariant::of(&g), &g));
                if found.is_none() {
                    out.push(format!("{}: {what} image {img} has no class", s.symbol));
                }
            }
            out
        })
        .collect();
    Ok(failures.into_iter().flatten().collect())
}
