//! Exhaustive solver for the local-parameter relations of a parameter set.

use crate::error::{invalid_arg, Result};
use crate::srg::SrgParams;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Local parameters `(Q, R, W, V)`, with `R = R′` and `W = W′`.
///
/// `v` is `None` when it is not determined: either only edge relations were
/// solved, or no vertex pair of type `3K1` exists so the value is vacuous.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalParamSolution {
    pub q: u64,
    pub r: u64,
    pub w: u64,
    pub v: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub trace: BTreeMap<String, String>,
}

impl LocalParamSolution {
    pub fn new(q: u64, r: u64, w: u64, v: Option<u64>) -> Self {
        LocalParamSolution { q, r, w, v, trace: BTreeMap::new() }
    }

    pub fn with_trace(mut self, key: &str, value: impl ToString) -> Self {
        self.trace.insert(key.to_string(), value.to_string());
        self
    }

    /// Same `(Q, R, W)` and compatible `V`; an undetermined `V` matches anything.
    pub fn matches(&self, other: &LocalParamSolution) -> bool {
        (self.q, self.r, self.w) == (other.q, other.r, other.w)
            && match (self.v, other.v) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            }
    }
}

struct Big {
    k: BigInt,
    l: BigInt,
    m: BigInt,
}

impl Big {
    fn of(p: &SrgParams) -> Self {
        Big { k: p.k.into(), l: p.lambda.into(), m: p.mu.into() }
    }

    /// `k(k−λ−1)/μ − k + μ − 1`, the size of `D²₂` for a non-edge.
    fn d22(&self) -> Option<BigInt> {
        let num: BigInt = &self.k * (&self.k - &self.l - 1);
        let (q, r) = num.div_rem(&self.m);
        r.is_zero().then(|| q - &self.k + &self.m - 1)
    }
}

/// `λ(λ−Q−1) = R(k−λ−1)`, `λμ(k−2λ+Q) = W(k−μ)(k−λ−1)`, `W(k−μ) = μ(λ−R)`.
pub fn edge_relations_check(p: &SrgParams, q: i64, r: i64, w: i64) -> bool {
    let b = Big::of(p);
    let (q, r, w) = (BigInt::from(q), BigInt::from(r), BigInt::from(w));
    let kl1 = &b.k - &b.l - 1;
    &b.l * (&b.l - &q - 1) == &r * &kl1
        && &b.l * &b.m * (&b.k - 2 * &b.l + &q) == &w * (&b.k - &b.m) * &kl1
        && &w * (&b.k - &b.m) == &b.m * (&b.l - &r)
}

/// `μ(λ−R′) = (k−μ)W′` and `μ(k−2−2λ+R′) = V·(k(k−λ−1)/μ − k + μ − 1)`.
pub fn nonedge_relations_check(p: &SrgParams, rp: i64, wp: i64, v: i64) -> bool {
    let b = Big::of(p);
    let (rp, wp, v) = (BigInt::from(rp), BigInt::from(wp), BigInt::from(v));
    if b.m.is_zero() {
        return false;
    }
    let first = &b.m * (&b.l - &rp) == (&b.k - &b.m) * &wp;
    let second = match b.d22() {
        Some(d22) => &b.m * (&b.k - 2 - 2 * &b.l + &rp) == v * d22,
        None => false,
    };
    first && second
}

fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("bounded by a u64 parameter")
}

fn solve(p: &SrgParams, with_nonedge: bool) -> Result<Vec<LocalParamSolution>> {
    if !p.is_nontrivial() {
        return Err(invalid_arg(format!("{p} is not a nontrivial SRG parameter set")));
    }
    let b = Big::of(p);
    let kl1 = &b.k - &b.l - 1;
    let km = &b.k - &b.m;
    let d22 = b.d22();
    let mut out = Vec::new();
    for r in 0..=p.lambda {
        let r = BigInt::from(r);
        if with_nonedge && r >= b.m {
            continue;
        }
        // λ(λ−Q−1) = R(k−λ−1)
        let q = if b.l.is_zero() {
            let prod: BigInt = &r * &kl1;
            if !prod.is_zero() {
                continue;
            }
            BigInt::zero()
        } else {
            let prod: BigInt = &r * &kl1;
            let (quot, rem) = prod.div_rem(&b.l);
            if !rem.is_zero() {
                continue;
            }
            &b.l - 1 - quot
        };
        if q < BigInt::zero() || (!b.l.is_zero() && q > &b.l - 1) {
            continue;
        }
        // W(k−μ) = μ(λ−R)
        let (w, rem) = (&b.m * (&b.l - &r)).div_rem(&km);
        if !rem.is_zero() || w < BigInt::zero() || w > b.l || (with_nonedge && w > b.m) {
            continue;
        }
        if &b.l * &b.m * (&b.k - 2 * &b.l + &q) != &w * &km * &kl1 {
            continue;
        }
        let v = if with_nonedge {
            let lhs: BigInt = &b.m * (&b.k - 2 - 2 * &b.l + &r);
            match &d22 {
                Some(d) if d.is_zero() => {
                    if !lhs.is_zero() {
                        continue;
                    }
                    None
                }
                Some(d) => {
                    let (v, rem) = lhs.div_rem(d);
                    if !rem.is_zero() || v < BigInt::zero() || v > b.m {
                        continue;
                    }
                    Some(to_u64(&v))
                }
                None => continue,
            }
        } else {
            None
        };
        out.push(LocalParamSolution::new(to_u64(&q), to_u64(&r), to_u64(&w), v));
    }
    Ok(out)
}

/// Every `(Q, R, W, V)` satisfying the edge and non-edge relations within their bounds,
/// scanning `R ∈ [0, λ]`. An undetermined `V` (no `3K1` supersets) is reported as `None`.
pub fn feasible_local_params(p: &SrgParams) -> Result<Vec<LocalParamSolution>> {
    solve(p, true)
}

/// Every `(Q, R, W)` satisfying the edge relations alone; `v` is always `None`.
pub fn feasible_edge_params(p: &SrgParams) -> Result<Vec<LocalParamSolution>> {
    solve(p, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvenFamily {
    B,
    C,
}

/// Candidate local parameters for an even `m` in family (b) or (c).
pub fn even_m_candidates(m: u64, family: EvenFamily) -> Result<LocalParamSolution> {
    if m < 2 || m % 2 == 1 {
        return Err(invalid_arg(format!("even-m candidates need an even m ≥ 2, got {m}")));
    }
    let (qw, rv) = match family {
        EvenFamily::B => ((m * m - m) / 2, (m * m - 2 * m) / 2),
        EvenFamily::C => ((m * m + m) / 2, (m * m + 2 * m) / 2),
    };
    Ok(LocalParamSolution::new(qw, rv, qw, Some(rv)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_solutions() {
        let s = feasible_local_params(&SrgParams::new(16, 6, 2, 2)).unwrap();
        assert_eq!(s, vec![LocalParamSolution::new(1, 0, 1, Some(0))]);
        let s = feasible_local_params(&SrgParams::new(16, 5, 0, 2)).unwrap();
        assert_eq!(s, vec![LocalParamSolution::new(0, 0, 0, Some(1))]);
        assert!(feasible_local_params(&SrgParams::new(10, 3, 0, 1)).unwrap().is_empty());
    }

    #[test]
    fn vacuous_v() {
        let s = feasible_local_params(&SrgParams::new(16, 10, 6, 6)).unwrap();
        assert_eq!(s, vec![LocalParamSolution::new(3, 4, 3, None)]);
        let c = even_m_candidates(2, EvenFamily::C).unwrap();
        assert!(s[0].matches(&c));
    }

    #[test]
    fn relation_checks() {
        assert!(edge_relations_check(&SrgParams::new(16, 6, 2, 2), 1, 0, 1));
        assert!(edge_relations_check(&SrgParams::new(15, 6, 1, 3), 0, 0, 1));
        assert!(!edge_relations_check(&SrgParams::new(10, 3, 0, 1), 0, 0, 1));
        assert!(nonedge_relations_check(&SrgParams::new(16, 5, 0, 2), 0, 0, 1));
    }

    #[test]
    fn even_candidates() {
        assert_eq!(even_m_candidates(2, EvenFamily::B).unwrap(), LocalParamSolution::new(1, 0, 1, Some(0)));
        assert_eq!(even_m_candidates(4, EvenFamily::B).unwrap(), LocalParamSolution::new(6, 4, 6, Some(4)));
        assert!(even_m_candidates(3, EvenFamily::C).is_err());
    }

    #[test]
    fn trivial_rejected() {
        assert!(feasible_local_params(&SrgParams::new(6, 5, 4, 0)).is_err());
    }
}
