//! Simple undirected graphs stored as adjacency bit matrices.
//!
//! Every row of the matrix is a fixed-width run of `u64` words, so neighbourhood
//! intersections and valencies reduce to word-wise `&` followed by popcount.

mod construct;
mod graph6;
mod iso;
mod named;
mod symbol;

pub use construct::{
    bicirculant, cartesian_product, circulant, complete, complete_bipartite, cycle, gq22_voltage,
    line_graph, paley, path, triangular, triangular_pairs, tricirculant, Gq22Vertex, PG14,
};
pub use graph6::{decode_graph6, encode_graph6, to_dot};
pub use iso::{is_isomorphic, GraphInvariant};
pub use named::NamedGraph;
pub use symbol::{BicirculantSymbol, CirculantSymbol, ResidueSet, Symbol, TricirculantSymbol};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// The complement graph; same as [`Graph::complement`].
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Largest order accepted by any constructor.
pub const MAX_ORDER: usize = 4096;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// An undirected simple graph on vertices `0..n`.
///
/// The adjacency matrix is symmetric with an empty diagonal. Graphs are
/// immutable once built; all constructors validate the order cap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidGraph(format!(
                "order {n} exceeds the cap of {MAX_ORDER}"
            )));
        }
        let words = words_for(n);
        Ok(Graph { n, words, bits: vec![0; n * words] })
    }

    /// Builds a graph by asking `adjacent(u, v)` for every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for order {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of vertices adjacent to every vertex of `set`.
    ///
    /// Members of `set` are never counted since the diagonal is empty.
    pub fn common_neighbors_of(&self, set: &[usize]) -> usize {
        let Some((&first, rest)) = set.split_first() else {
            return 0;
        };
        let mut acc = self.row(first).to_vec();
        for &v in rest {
            for (a, b) in acc.iter_mut().zip(self.row(v)) {
                *a &= b;
            }
        }
        acc.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let tail = self.n % 64;
        for v in 0..self.n {
            let row = &mut g.bits[v * self.words..(v + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            row[v / 64] &= !(1u64 << (v % 64));
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// True when `perm` maps edges to edges (hence non-edges to non-edges).
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        check_permutation(perm, self.n).is_ok()
            && self.edges().all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// A maximum clique, found by Bron–Kerbosch with pivoting over bit rows.
    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let all: Vec<u64> = {
            let mut v = vec![u64::MAX; self.words];
            let tail = self.n % 64;
            if tail != 0 {
                v[self.words - 1] = (1u64 << tail) - 1;
            }
            v
        };
        self.bron_kerbosch(&mut current, all, vec![0; self.words], &mut best);
        best
    }

    fn bron_kerbosch(&self, current: &mut Vec<usize>, p: Vec<u64>, x: Vec<u64>, best: &mut Vec<usize>) {
        if is_zero(&p) {
            if is_zero(&x) && current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + popcount(&p) <= best.len() {
            return;
        }
        let pivot = BitIter::new(&p)
            .chain(BitIter::new(&x))
            .max_by_key(|&u| popcount_and(&p, self.row(u)))
            .unwrap_or(0);
        let candidates: Vec<usize> = BitIter::new(&p)
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let row = self.row(v);
            let np: Vec<u64> = p.iter().zip(row).map(|(a, b)| a & b).collect();
            let nx: Vec<u64> = x.iter().zip(row).map(|(a, b)| a & b).collect();
            current.push(v);
            self.bron_kerbosch(current, np, nx, best);
            current.pop();
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    /// Adjacency matrix as rows of `0`/`1` characters.
    pub fn adjacency_string(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1));
        for u in 0..self.n {
            for v in 0..self.n {
                out.push(if self.has_edge(u, v) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n, self.edge_count(), encode_graph6(self))
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!("permutation has length {} not {n}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
    }
    Ok(())
}

#[inline]
fn is_zero(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Iterates the set bit positions of a word slice in increasing order.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter { words, index: 0, current: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
