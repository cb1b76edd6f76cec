//! Parameter families of strongly regular bicirculants and tricirculants.

use crate::error::{invalid_arg, Result};
use crate::srg::{discriminant, verify_identity, SrgParams};
use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

/// Odd-order bicirculant family with its symbol cardinalities `|S|` and `|T|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicircOddFamily {
    pub m: u64,
    pub params: SrgParams,
    pub s_size: u64,
    pub t_size: u64,
}

/// `(2(2m²+2m+1), m(2m+1), m²−1, m²)` with `|S| = m(m+1)`, `|T| = m²`.
pub fn bicirc_odd_family(m: u64) -> Result<BicircOddFamily> {
    if m < 1 {
        return Err(invalid_arg("odd bicirculant family needs m ≥ 1"));
    }
    let params = SrgParams::new(2 * (2 * m * m + 2 * m + 1), m * (2 * m + 1), m * m - 1, m * m);
    debug_assert!(verify_identity(&params));
    Ok(BicircOddFamily { m, params, s_size: m * (m + 1), t_size: m * m })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LeungMaFamily {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d+")]
    DPlus,
    #[serde(rename = "d-")]
    DMinus,
}

impl LeungMaFamily {
    pub const ALL: [LeungMaFamily; 5] =
        [LeungMaFamily::A, LeungMaFamily::B, LeungMaFamily::C, LeungMaFamily::DPlus, LeungMaFamily::DMinus];

    pub fn min_m(self) -> u64 {
        match self {
            LeungMaFamily::A => 1,
            LeungMaFamily::B | LeungMaFamily::DPlus | LeungMaFamily::DMinus => 2,
            LeungMaFamily::C => 3,
        }
    }
}

/// A partial difference triple tuple `(n; c, d; λ, μ)` and the resulting graph parameters `(2n, c+d, λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeungMaTuple {
    pub family: LeungMaFamily,
    pub m: u64,
    pub n: u64,
    pub c: u64,
    pub d: u64,
    pub lambda: u64,
    pub mu: u64,
    pub params: SrgParams,
}

/// The even-order tuples admitted at `m`; families whose lower bound exceeds `m` are omitted.
pub fn leung_ma_families(m: u64) -> Vec<LeungMaTuple> {
    let sq = m * m;
    LeungMaFamily::ALL
        .into_iter()
        .filter(|f| m >= f.min_m())
        .map(|family| {
            let (n, c, d, lambda, mu) = match family {
                LeungMaFamily::A => (2 * sq + 2 * m + 1, sq, sq + m, sq - 1, sq),
                LeungMaFamily::B => (2 * sq, sq, sq - m, sq - m, sq - m),
                LeungMaFamily::C => (2 * sq, sq, sq + m, sq + m, sq + m),
                LeungMaFamily::DPlus => (2 * sq, sq + m, sq, sq + m, sq + m),
                LeungMaFamily::DMinus => (2 * sq, sq - m, sq, sq - m, sq - m),
            };
            let params = SrgParams::new(2 * n, c + d, lambda, mu);
            LeungMaTuple { family, m, n, c, d, lambda, mu, params }
        })
        .collect()
}

/// One of the two tricirculant parameter families at a given `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriFamilyInstance {
    pub family: u8,
    pub s: i64,
    /// `(3n, k, λ, μ)` as signed values, possibly negative.
    pub raw: [i128; 4],
    /// Present when every entry is non-negative and the counting identity holds.
    pub params: Option<SrgParams>,
    pub orbit_length: i128,
    pub discriminant: Option<i128>,
    pub discriminant_root: Option<i128>,
    /// `gcd(n, 6√disc) = 1`, when the root exists.
    pub coprime_to_six_root: Option<bool>,
}

fn tri_instance(family: u8, s: i64, raw: [i128; 4]) -> TriFamilyInstance {
    let params = raw.iter().all(|&v| v >= 0).then(|| {
        let [n, k, l, m] = raw.map(|v| v as u64);
        SrgParams::new(n, k, l, m)
    });
    let params = params.filter(|p| p.n >= 2 && p.k < p.n && verify_identity(p));
    let orbit_length = raw[0] / 3;
    let discriminant = params.map(|p| discriminant(&p));
    let discriminant_root = discriminant.filter(|&d| d >= 0).and_then(|d| {
        let r = d.sqrt();
        (r * r == d).then_some(r)
    });
    let coprime_to_six_root = discriminant_root.map(|r| orbit_length.gcd(&(6 * r)) == 1);
    TriFamilyInstance { family, s, raw, params, orbit_length, discriminant, discriminant_root, coprime_to_six_root }
}

/// Family 1 `(3(12s²+9s+2), (4s+1)(3s+1), s(4s+3), s(4s+1))` and
/// family 2 `(3(3s²−3s+1), s(3s−1), s²+s−1, s²)`.
pub fn tricirc_families(s: i64) -> [TriFamilyInstance; 2] {
    let t = s as i128;
    [
        tri_instance(1, s, [3 * (12 * t * t + 9 * t + 2), (4 * t + 1) * (3 * t + 1), t * (4 * t + 3), t * (4 * t + 1)]),
        tri_instance(2, s, [3 * (3 * t * t - 3 * t + 1), t * (3 * t - 1), t * t + t - 1, t * t]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bicirc_small_members() {
        let f = bicirc_odd_family(1).unwrap();
        assert_eq!((f.params, f.s_size, f.t_size), (SrgParams::new(10, 3, 0, 1), 2, 1));
        let f = bicirc_odd_family(2).unwrap();
        assert_eq!((f.params, f.s_size, f.t_size), (SrgParams::new(26, 10, 3, 4), 6, 4));
        assert!(bicirc_odd_family(0).is_err());
    }

    #[test]
    fn leung_ma_examples() {
        let b = leung_ma_families(2).into_iter().find(|t| t.family == LeungMaFamily::B).unwrap();
        assert_eq!((b.n, b.c, b.d, b.lambda, b.mu), (8, 4, 2, 2, 2));
        assert_eq!(b.params, SrgParams::new(16, 6, 2, 2));
        let c = leung_ma_families(3).into_iter().find(|t| t.family == LeungMaFamily::C).unwrap();
        assert_eq!((c.n, c.c, c.d, c.lambda, c.mu), (18, 9, 12, 12, 12));
        assert_eq!(c.params, SrgParams::new(36, 21, 12, 12));
        let a = leung_ma_families(1);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].params, SrgParams::new(10, 3, 0, 1));
    }

    #[test]
    fn tri_examples() {
        let [f1, _] = tricirc_families(-1);
        assert_eq!(f1.params, Some(SrgParams::new(15, 6, 1, 3)));
        let [_, f2] = tricirc_families(2);
        assert_eq!(f2.params, Some(SrgParams::new(21, 10, 5, 4)));
        let [_, f2] = tricirc_families(0);
        assert_eq!(f2.raw[2], -1);
        assert!(f2.params.is_none());
    }
}
