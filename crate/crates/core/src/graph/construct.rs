use super::symbol::{BicirculantSymbol, ResidueSet, TricirculantSymbol};
use super::Graph;
use crate::error::{Error, Result};

/// `Circ(n, S)`: vertices `Z_n`, `u ~ v` iff `v - u ∈ S`.
pub fn circulant(n: usize, s: &ResidueSet) -> Result<Graph> {
    let sym = super::CirculantSymbol::new(n, s.clone())?;
    Graph::from_fn(n, |u, v| sym.s.contains((v + n - u) % n))
}

/// The `n`-bicirculant with symbol `[S, S', T]`.
///
/// Vertices `0..n` form the first orbit and `n..2n` the second; the rotation
/// `i ↦ i+1` inside each orbit is an automorphism.
pub fn bicirculant(sym: &BicirculantSymbol) -> Result<Graph> {
    let sym = BicirculantSymbol::new(sym.n, sym.s.clone(), sym.sp.clone(), sym.t.clone())?;
    let n = sym.n;
    Graph::from_fn(2 * n, |a, b| {
        // a < b, so only (u_a, w_{b-n}) pairs cross orbits; (b - n) - a ≡ b - a
        let d = (b - a) % n;
        match (a < n, b < n) {
            (true, true) => sym.s.contains(d),
            (false, false) => sym.sp.contains(d),
            _ => sym.t.contains(d),
        }
    })
}

/// The `n`-tricirculant with orbits `{an, ..., an+n-1}` for `a ∈ {0,1,2}`.
pub fn tricirculant(sym: &TricirculantSymbol) -> Result<Graph> {
    let sym = TricirculantSymbol::new(sym.n, sym.s.clone(), sym.t.clone())?;
    let n = sym.n;
    Graph::from_fn(3 * n, |x, y| {
        let (a, i) = (x / n, x % n);
        let (b, j) = (y / n, y % n);
        if a == b {
            sym.s[a].contains((j + n - i) % n)
        } else if b == (a + 1) % 3 {
            sym.t[a].contains((j + n - i) % n)
        } else {
            sym.t[b].contains((i + n - j) % n)
        }
    })
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The Paley graph `P(p)` for a prime `p ≡ 1 (mod 4)`.
pub fn paley(p: usize) -> Result<Graph> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::InvalidArgument(format!("Paley graphs need a prime p ≡ 1 (mod 4), got {p}")));
    }
    let squares: ResidueSet = (1..p).map(|x| x * x % p).collect();
    circulant(p, &squares)
}

/// The 2-subsets of `{1..m}` in lexicographic order; vertex `i` of [`triangular`] is entry `i`.
pub fn triangular_pairs(m: usize) -> Vec<(usize, usize)> {
    (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).collect()
}

/// The triangular graph `T(m)`: 2-subsets of `{1..m}`, adjacent iff they meet.
pub fn triangular(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("T(m) needs m >= 3, got {m}")));
    }
    let pairs = triangular_pairs(m);
    Graph::from_fn(pairs.len(), |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        a == c || a == d || b == c || b == d
    })
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_fn(a + b, |u, v| u < a && v >= a)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycles need n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Line graph; vertex `i` is the `i`-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<_> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::InvalidArgument("line graph of an edgeless graph is empty".into()));
    }
    Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    })
}

/// Box product; vertex `(x, y)` is `x * |H| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let m = h.order();
    Graph::from_fn(g.order() * m, |u, v| {
        let (x1, y1) = (u / m, u % m);
        let (x2, y2) = (v / m, v % m);
        (x1 == x2 && h.has_edge(y1, y2)) || (y1 == y2 && g.has_edge(x1, x2))
    })
}

/// Points of the projective line over GF(4), with `1 + w = w²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PG14 {
    Inf,
    Zero,
    /// `w^k` for `k ∈ {0,1,2}`.
    Pow(u8),
}

impl PG14 {
    pub const ALL: [PG14; 5] = [PG14::Inf, PG14::Zero, PG14::Pow(0), PG14::Pow(1), PG14::Pow(2)];

    fn index(self) -> usize {
        match self {
            PG14::Inf => 0,
            PG14::Zero => 1,
            PG14::Pow(k) => 2 + k as usize,
        }
    }
}

/// Vertex `(x, i)` of [`gq22_voltage`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gq22Vertex(pub PG14, pub u8);

impl Gq22Vertex {
    pub fn index(self) -> usize {
        3 * self.0.index() + self.1 as usize
    }
}

/// `w^i + w^j` in GF(4) for `i != j`, as the exponent `k` with `w^k` equal to the sum.
fn gf4_sum_exponent(i: u8, j: u8) -> u8 {
    // {0,1,2} minus {i,j}: 1 + w = w², 1 + w² = w, w + w² = 1
    3 - i - j
}

/// `τ_k = (k)(k-1, k+1)` acting on `Z_3`.
fn reflection(k: u8, i: u8) -> u8 {
    (2 * k + 3 - i) % 3
}

/// Voltage on the `K5` edge between two fibres; `None` for the identity.
fn voltage(a: PG14, b: PG14) -> Option<u8> {
    match (a, b) {
        (PG14::Inf, _) | (_, PG14::Inf) => None,
        (PG14::Zero, PG14::Pow(i)) | (PG14::Pow(i), PG14::Zero) => Some(i),
        (PG14::Pow(i), PG14::Pow(j)) => Some(gf4_sum_exponent(i, j)),
        (PG14::Zero, PG14::Zero) => unreachable!("fibres are distinct"),
    }
}

/// The point graph of GQ(2,2) as a 3-fold voltage cover of `K5` with triangles in the fibres.
///
/// Vertex `(x, i)` has index `3 * idx(x) + i` with `∞, 0, 1, w, w²` in that order.
pub fn gq22_voltage() -> Graph {
    let mut g = Graph::empty(15).expect("15 is a valid order");
    for &a in &PG14::ALL {
        for i in 0..3u8 {
            for j in i + 1..3 {
                g.set_edge(Gq22Vertex(a, i).index(), Gq22Vertex(a, j).index());
            }
        }
    }
    for (ai, &a) in PG14::ALL.iter().enumerate() {
        for &b in &PG14::ALL[ai + 1..] {
            for i in 0..3u8 {
                let j = match voltage(a, b) {
                    None => i,
                    Some(k) => reflection(k, i),
                };
                g.set_edge(Gq22Vertex(a, i).index(), Gq22Vertex(b, j).index());
            }
        }
    }
    g
}
