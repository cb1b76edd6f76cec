//! Isomorphism testing by colour refinement plus individualisation backtracking.
//!
//! Both graphs are refined together so colour ids are comparable across them;
//! a branch dies as soon as some colour class has different sizes on the two sides.

use super::Graph;

/// Adjacency lists of `G ⊔ H`, with `H` shifted by `|G|`.
struct Union {
    split: usize,
    adj: Vec<Vec<usize>>,
}

impl Union {
    fn new(graphs: &[&Graph]) -> Self {
        let mut adj = Vec::new();
        let mut offset = 0;
        for g in graphs {
            for v in 0..g.order() {
                adj.push(g.neighbors(v).map(|u| u + offset).collect());
            }
            offset += g.order();
        }
        Union { split: graphs[0].order(), adj }
    }
}

/// Refines `colors` to the coarsest equitable partition below it.
///
/// New colours are ranks of sorted signatures, so the result does not depend on vertex names.
fn refine(adj: &[Vec<usize>], colors: &mut [u32]) {
    let mut count = distinct(colors);
    loop {
        let signatures: Vec<(u32, Vec<(u32, u32)>)> = adj
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                let mut cs: Vec<u32> = nbrs.iter().map(|&u| colors[u]).collect();
                cs.sort_unstable();
                let mut runs: Vec<(u32, u32)> = Vec::new();
                for c in cs {
                    match runs.last_mut() {
                        Some((last, n)) if *last == c => *n += 1,
                        _ => runs.push((c, 1)),
                    }
                }
                (colors[v], runs)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<(u32, u32)>)> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        for (v, sig) in signatures.iter().enumerate() {
            colors[v] = sorted.binary_search(&sig).expect("signature present") as u32;
        }
        let next = sorted.len();
        if next == count {
            return;
        }
        count = next;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Per-colour vertex counts on each side agree.
fn balanced(colors: &[u32], split: usize) -> bool {
    let max = colors.iter().copied().max().unwrap_or(0) as usize + 1;
    let mut diff = vec![0i64; max];
    for (v, &c) in colors.iter().enumerate() {
        diff[c as usize] += if v < split { 1 } else { -1 };
    }
    diff.iter().all(|&d| d == 0)
}

fn search(u: &Union, g: &Graph, h: &Graph, colors: Vec<u32>) -> Option<Vec<usize>> {
    let mut colors = colors;
    refine(&u.adj, &mut colors);
    if !balanced(&colors, u.split) {
        return None;
    }
    let n = u.split;
    let mut class_size = vec![0usize; colors.iter().copied().max().unwrap_or(0) as usize + 1];
    for &c in &colors[..n] {
        class_size[c as usize] += 1;
    }
    // smallest non-singleton class, first G-vertex in it
    let target = (0..class_size.len()).filter(|&c| class_size[c] > 1).min_by_key(|&c| class_size[c]);
    let Some(target) = target else {
        let mut image = vec![0; n];
        for v in 0..n {
            let c = colors[v];
            image[v] = (n..2 * n).find(|&w| colors[w] == c).expect("balanced") - n;
        }
        let ok = g.edges().all(|(a, b)| h.has_edge(image[a], image[b]));
        return ok.then_some(image);
    };
    let v = (0..n).find(|&v| colors[v] == target as u32).expect("class is non-empty");
    let fresh = class_size.len() as u32;
    for w in (n..2 * n).filter(|&w| colors[w] == target as u32) {
        let mut next = colors.clone();
        next[v] = fresh;
        next[w] = fresh;
        if let Some(found) = search(u, g, h, next) {
            return Some(found);
        }
    }
    None
}

/// A bijection `φ` with `u ~ v` in `g` iff `φ(u) ~ φ(v)` in `h`, if one exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let union = Union::new(&[g, h]);
    let colors: Vec<u32> = (0..union.adj.len()).map(|v| union.adj[v].len() as u32).collect();
    search(&union, g, h, colors)
}

/// Isomorphism invariant used to bucket graphs before exact comparison.
///
/// For every vertex `v` it records the class sizes of the equitable partition
/// obtained after individualising `v`, and keeps the sorted multiset of those.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphInvariant {
    order: usize,
    edges: usize,
    profiles: Vec<Vec<usize>>,
}

impl GraphInvariant {
    pub fn of(g: &Graph) -> Self {
        let union = Union::new(&[g]);
        let mut base: Vec<u32> = (0..g.order()).map(|v| g.degree(v) as u32).collect();
        refine(&union.adj, &mut base);
        let fresh = base.iter().copied().max().unwrap_or(0) + 1;
        let mut profiles: Vec<Vec<usize>> = (0..g.order())
            .map(|v| {
                let mut colors = base.clone();
                colors[v] = fresh;
                refine(&union.adj, &mut colors);
                let mut sizes = vec![0usize; colors.iter().copied().max().unwrap_or(0) as usize + 1];
                for &c in &colors {
                    sizes[c as usize] += 1;
                }
                sizes.sort_unstable();
                sizes
            })
            .collect();
        profiles.sort();
        GraphInvariant { order: g.order(), edges: g.edge_count(), profiles }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, path};

    #[test]
    fn relabelled_graph_is_found() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.permuted(&perm).unwrap();
        let phi = is_isomorphic(&g, &h).unwrap();
        for (a, b) in g.edges() {
            assert!(h.has_edge(phi[a], phi[b]));
        }
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()).is_some());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two triangles: both 2-regular on six vertices
        let c6 = cycle(6).unwrap();
        let two_k3 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(is_isomorphic(&c6, &two_k3).is_none());
        assert_ne!(GraphInvariant::of(&c6), GraphInvariant::of(&two_k3));
    }

    #[test]
    fn order_mismatch() {
        assert!(is_isomorphic(&path(3).unwrap(), &path(4).unwrap()).is_none());
        assert!(is_isomorphic(&complete_bipartite(1, 3).unwrap(), &path(4).unwrap()).is_none());
    }
}
