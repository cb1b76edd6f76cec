//! Strong regularity: parameters, the feasibility identity, exact eigenvalues
//! and the Hoffman clique bound.

mod surd;

pub use surd::QuadraticSurd;

use crate::error::{invalid_arg, Result};
use crate::graph::{popcount_and, Graph};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Parameters `(n, k, λ, μ)`. Construction does not enforce the identity;
/// see [`verify_identity`] and [`SrgParams::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub const fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// Checks the counting identity and the basic bounds.
    pub fn validate(&self) -> Result<()> {
        let SrgParams { n, k, lambda, mu } = *self;
        if n < 2 || k >= n {
            return Err(invalid_arg(format!("{self}: need n ≥ 2 and k < n")));
        }
        if k > 0 && lambda > k - 1 {
            return Err(invalid_arg(format!("{self}: λ exceeds k−1")));
        }
        if mu > k {
            return Err(invalid_arg(format!("{self}: μ exceeds k")));
        }
        if !verify_identity(self) {
            return Err(invalid_arg(format!("{self}: k(k−λ−1) ≠ μ(n−1−k)")));
        }
        Ok(())
    }

    /// Valid with `0 < μ < k < n−1`, i.e. the graph and its complement are connected and not complete.
    pub fn is_nontrivial(&self) -> bool {
        self.validate().is_ok() && 0 < self.mu && self.mu < self.k && self.k + 1 < self.n
    }

    fn signed(&self) -> (i128, i128, i128, i128) {
        (self.n as i128, self.k as i128, self.lambda as i128, self.mu as i128)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// `k(k−λ−1) = μ(n−1−k)`.
pub fn verify_identity(p: &SrgParams) -> bool {
    let (n, k, l, m) = p.signed();
    k * (k - l - 1) == m * (n - 1 - k)
}

/// Parameters of the complementary graph.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    p.validate()?;
    let (n, k, l, m) = p.signed();
    let kc = n - k - 1;
    let lc = n - 2 - 2 * k + m;
    let mc = n - 2 * k + l;
    if lc < 0 || mc < 0 {
        return Err(invalid_arg(format!("{p}: complement parameters are negative")));
    }
    let q = SrgParams::new(n as u64, kc as u64, lc as u64, mc as u64);
    q.validate()?;
    Ok(q)
}

/// `(n, k, λ, μ)` when `g` is strongly regular.
///
/// λ (resp. μ) is 0 when `g` has no edges (resp. no non-edges).
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let k = g.regular_degree()?;
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = popcount_and(g.row(u), g.row(v));
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams::new(n as u64, k as u64, lambda.unwrap_or(0) as u64, mu.unwrap_or(0) as u64))
}

/// The three distinct eigenvalues `k > r > s` of a nontrivial SRG.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalues {
    pub k: QuadraticSurd,
    pub r: QuadraticSurd,
    pub s: QuadraticSurd,
}

/// Discriminant `(λ−μ)² + 4(k−μ)`.
pub fn discriminant(p: &SrgParams) -> i128 {
    let (_, k, l, m) = p.signed();
    (l - m) * (l - m) + 4 * (k - m)
}

/// `r, s = ((λ−μ) ± √((λ−μ)²+4(k−μ))) / 2`.
pub fn eigenvalues(p: &SrgParams) -> Result<Eigenvalues> {
    if !p.is_nontrivial() {
        return Err(invalid_arg(format!("{p} is not a nontrivial SRG parameter set")));
    }
    let (_, k, l, m) = p.signed();
    let disc = discriminant(p) as u64;
    Ok(Eigenvalues {
        k: QuadraticSurd::integer(k),
        r: QuadraticSurd::new(l - m, 1, disc, 2),
        s: QuadraticSurd::new(l - m, -1, disc, 2),
    })
}

/// `1 + k/m` where `−m` is the smallest eigenvalue; every clique is at most this large.
pub fn hoffman_bound(p: &SrgParams) -> Result<QuadraticSurd> {
    let ev = eigenvalues(p)?;
    let k = QuadraticSurd::integer(p.k as i128);
    let ratio = k.checked_div(&ev.s.neg()).expect("s is nonzero for nontrivial parameters");
    Ok(ratio.checked_add(&QuadraticSurd::integer(1)).expect("rational shift"))
}

/// Largest integer clique size allowed by [`hoffman_bound`].
pub fn hoffman_clique_limit(p: &SrgParams) -> Result<u64> {
    Ok(hoffman_bound(p)?.floor() as u64)
}

/// Induced subgraph on the vertices at distance exactly `i` from `v`, in vertex order.
pub fn subconstituent(g: &Graph, v: usize, i: usize) -> Result<Graph> {
    if !(1..=2).contains(&i) {
        return Err(invalid_arg(format!("subconstituent index {i} must be 1 or 2")));
    }
    if v >= g.order() {
        return Err(invalid_arg(format!("vertex {v} out of range")));
    }
    let dist = g.distances_from(v);
    let cell: Vec<usize> = (0..g.order()).filter(|&u| dist[u] == Some(i)).collect();
    if cell.is_empty() {
        return Err(invalid_arg(format!("no vertex at distance {i} from {v}")));
    }
    g.induced(&cell)
}

/// Strongly regular with both `g` and its complement connected.
pub fn is_nontrivial_srg(g: &Graph) -> bool {
    srg_params(g).is_some() && g.is_connected() && g.complement().is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, NamedGraph};

    #[test]
    fn named_parameters() {
        let p = srg_params(&NamedGraph::Petersen.build().unwrap()).unwrap();
        assert_eq!(p, SrgParams::new(10, 3, 0, 1));
        let c = srg_params(&NamedGraph::Clebsch.build().unwrap()).unwrap();
        assert_eq!(c, SrgParams::new(16, 5, 0, 2));
        assert!(srg_params(&crate::graph::path(4).unwrap()).is_none());
    }

    #[test]
    fn complement_parameters() {
        let c = complement_params(&SrgParams::new(16, 5, 0, 2)).unwrap();
        assert_eq!(c, SrgParams::new(16, 10, 6, 6));
        assert_eq!(complement_params(&c).unwrap(), SrgParams::new(16, 5, 0, 2));
        assert_eq!(complement_params(&SrgParams::new(10, 3, 0, 1)).unwrap(), SrgParams::new(10, 6, 3, 4));
    }

    #[test]
    fn identity() {
        assert!(verify_identity(&SrgParams::new(16, 6, 2, 2)));
        assert!(!verify_identity(&SrgParams::new(10, 3, 1, 1)));
    }

    #[test]
    fn spectra() {
        let e = eigenvalues(&SrgParams::new(16, 6, 2, 2)).unwrap();
        assert_eq!((e.r.as_integer(), e.s.as_integer()), (Some(2), Some(-2)));
        let c5 = eigenvalues(&SrgParams::new(5, 2, 0, 1)).unwrap();
        assert_eq!(c5.r.to_string(), "(-1+√5)/2");
        assert_eq!(c5.s.to_string(), "(-1-√5)/2");
    }

    #[test]
    fn hoffman() {
        assert_eq!(hoffman_bound(&SrgParams::new(16, 6, 2, 2)).unwrap().as_integer(), Some(4));
        let p = hoffman_bound(&SrgParams::new(10, 3, 0, 1)).unwrap();
        assert_eq!(p, QuadraticSurd::rational(5, 2));
        assert_eq!(p.floor(), 2);
    }

    #[test]
    fn trivial_graphs() {
        assert!(!is_nontrivial_srg(&complete(6).unwrap()));
        assert!(is_nontrivial_srg(&cycle(5).unwrap()));
        assert!(eigenvalues(&SrgParams::new(6, 5, 4, 0)).is_err());
        assert!(subconstituent(&cycle(5).unwrap(), 0, 3).is_err());
    }
}
