//! 3-isoregular edges and non-edges, local 3-isoregularity, and the D-partition of a pair.

use crate::error::{invalid_arg, Result};
use crate::graph::{popcount, Graph};
use crate::srg::SrgParams;
use serde::{Deserialize, Serialize};

/// `(Q, R, W)` of a 3-isoregular edge; `vacuous[i]` marks a type with no witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeLocalParams {
    pub q: u64,
    pub r: u64,
    pub w: u64,
    pub vacuous: [bool; 3],
}

/// `(R′, W′, V)` of a 3-isoregular non-edge; `vacuous[i]` marks a type with no witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NonEdgeLocalParams {
    pub rp: u64,
    pub wp: u64,
    pub v: u64,
    pub vacuous: [bool; 3],
}

/// Groups the third vertices by how many of `x, y` they see (2, 1, 0) and
/// returns the common valency per group, or `None` if some group disagrees.
fn grouped_valencies(g: &Graph, x: usize, y: usize) -> Option<([u64; 3], [bool; 3])> {
    let mut value: [Option<u64>; 3] = [None; 3];
    let mut acc = vec![0u64; g.row_words()];
    let pair: Vec<u64> = g.row(x).iter().zip(g.row(y)).map(|(a, b)| a & b).collect();
    for z in 0..g.order() {
        if z == x || z == y {
            continue;
        }
        let group = match (g.has_edge(x, z), g.has_edge(y, z)) {
            (true, true) => 0,
            (true, false) | (false, true) => 1,
            (false, false) => 2,
        };
        for ((a, p), r) in acc.iter_mut().zip(&pair).zip(g.row(z)) {
            *a = p & r;
        }
        let c = popcount(&acc) as u64;
        match value[group] {
            None => value[group] = Some(c),
            Some(prev) if prev != c => return None,
            _ => {}
        }
    }
    Some((value.map(|v| v.unwrap_or(0)), value.map(|v| v.is_none())))
}

fn check_pair(g: &Graph, x: usize, y: usize) -> Result<()> {
    if x >= g.order() || y >= g.order() {
        return Err(invalid_arg(format!("vertex pair ({x},{y}) out of range")));
    }
    if x == y {
        return Err(invalid_arg("pair needs two distinct vertices"));
    }
    Ok(())
}

/// `(Q, R, W)` when the edge `x ~ y` is 3-isoregular.
pub fn edge_iso_params(g: &Graph, x: usize, y: usize) -> Result<Option<EdgeLocalParams>> {
    check_pair(g, x, y)?;
    if !g.has_edge(x, y) {
        return Err(invalid_arg(format!("({x},{y}) is not an edge")));
    }
    Ok(grouped_valencies(g, x, y).map(|([q, r, w], vacuous)| EdgeLocalParams { q, r, w, vacuous }))
}

/// `(R′, W′, V)` when the non-edge `x ≁ z` is 3-isoregular.
pub fn nonedge_iso_params(g: &Graph, x: usize, z: usize) -> Result<Option<NonEdgeLocalParams>> {
    check_pair(g, x, z)?;
    if g.has_edge(x, z) {
        return Err(invalid_arg(format!("({x},{z}) is an edge")));
    }
    Ok(grouped_valencies(g, x, z).map(|([rp, wp, v], vacuous)| NonEdgeLocalParams { rp, wp, v, vacuous }))
}

/// First 3-isoregular edge and non-edge at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalReport {
    pub vertex: usize,
    pub locally_3isoregular: bool,
    pub edge: Option<(usize, EdgeLocalParams)>,
    pub nonedge: Option<(usize, NonEdgeLocalParams)>,
}

pub fn is_locally_3isoregular_at(g: &Graph, x: usize) -> Result<LocalReport> {
    if x >= g.order() {
        return Err(invalid_arg(format!("vertex {x} out of range")));
    }
    let mut edge = None;
    let mut nonedge = None;
    for y in (0..g.order()).filter(|&y| y != x) {
        if g.has_edge(x, y) {
            if edge.is_none() {
                edge = edge_iso_params(g, x, y)?.map(|p| (y, p));
            }
        } else if nonedge.is_none() {
            nonedge = nonedge_iso_params(g, x, y)?.map(|p| (y, p));
        }
        if edge.is_some() && nonedge.is_some() {
            break;
        }
    }
    Ok(LocalReport { vertex: x, locally_3isoregular: edge.is_some() && nonedge.is_some(), edge, nonedge })
}

/// Cells `D^i_j = Γ_i(x) ∩ Γ_j(y)` for `i, j ∈ {1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DPartition {
    pub x: usize,
    pub y: usize,
    pub d11: Vec<usize>,
    pub d12: Vec<usize>,
    pub d21: Vec<usize>,
    pub d22: Vec<usize>,
}

impl DPartition {
    /// `[|D¹₁|, |D¹₂|, |D²₁|, |D²₂|]`.
    pub fn sizes(&self) -> [usize; 4] {
        [self.d11.len(), self.d12.len(), self.d21.len(), self.d22.len()]
    }
}

pub fn d_partition(g: &Graph, x: usize, y: usize) -> Result<DPartition> {
    check_pair(g, x, y)?;
    let dx = g.distances_from(x);
    let dy = g.distances_from(y);
    let cell = |i, j| -> Vec<usize> {
        (0..g.order())
            .filter(|&v| v != x && v != y && dx[v] == Some(i) && dy[v] == Some(j))
            .collect()
    };
    Ok(DPartition { x, y, d11: cell(1, 1), d12: cell(1, 2), d21: cell(2, 1), d22: cell(2, 2) })
}

/// Cell sizes forced by the parameters: for an edge
/// `(λ, k−λ−1, k−λ−1, (k−μ)(k−λ−1)/μ)`, for a non-edge `(μ, k−μ, k−μ, k(k−λ−1)/μ − k + μ − 1)`.
pub fn expected_cell_sizes(p: &SrgParams, adjacent: bool) -> Option<[u64; 4]> {
    let (k, l, m) = (p.k as i128, p.lambda as i128, p.mu as i128);
    if m == 0 {
        return None;
    }
    let sizes = if adjacent {
        let num = (k - m) * (k - l - 1);
        if num % m != 0 {
            return None;
        }
        [l, k - l - 1, k - l - 1, num / m]
    } else {
        let num = k * (k - l - 1);
        if num % m != 0 {
            return None;
        }
        [m, k - m, k - m, num / m - k + m - 1]
    };
    sizes.iter().all(|&s| s >= 0).then(|| sizes.map(|s| s as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn petersen_edges_and_nonedges() {
        let g = NamedGraph::Petersen.build().unwrap();
        let p = edge_iso_params(&g, 0, 1).unwrap().unwrap();
        assert_eq!((p.q, p.r, p.w), (0, 0, 0));
        assert_eq!(p.vacuous, [true, false, false]);
        let z = (1..10).find(|&z| !g.has_edge(0, z)).unwrap();
        assert!(nonedge_iso_params(&g, 0, z).unwrap().is_none());
        assert!(!is_locally_3isoregular_at(&g, 0).unwrap().locally_3isoregular);
        assert!(edge_iso_params(&g, 0, z).is_err());
        assert!(nonedge_iso_params(&g, 0, 1).is_err());
    }

    #[test]
    fn partition_sizes() {
        let g = NamedGraph::Petersen.build().unwrap();
        let d = d_partition(&g, 0, 1).unwrap();
        assert_eq!(d.sizes(), [0, 2, 2, 4]);
        let p = SrgParams::new(10, 3, 0, 1);
        assert_eq!(expected_cell_sizes(&p, true), Some([0, 2, 2, 4]));
        let k4k4 = NamedGraph::K4xK4.build().unwrap();
        let y = k4k4.neighbors(0).next().unwrap();
        assert_eq!(d_partition(&k4k4, 0, y).unwrap().sizes(), [2, 3, 3, 6]);
    }
}
