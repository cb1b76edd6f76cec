//! Residue-set symbols describing circulants, bicirculants and tricirculants.
//!
//! Text form, residues comma separated, negatives reduced mod `n`:
//!
//! ```text
//! circ:n=5;S=1,-1
//! bi:n=8;S=1,-1,4;Sp=3,-3,4;T=0,2
//! tri:n=5;S0=1,-1;S1=;S2=2,-2;T01=0;T12=0,1;T20=3
//! ```

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A set of residues mod some modulus, kept sorted and deduplicated.
///
/// The modulus lives in the owning symbol; helpers that need it take it as an argument.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueSet(Vec<usize>);

impl ResidueSet {
    pub fn new(mut residues: Vec<usize>) -> Self {
        residues.sort_unstable();
        residues.dedup();
        ResidueSet(residues)
    }

    /// Reduces arbitrary integers mod `n`.
    pub fn from_ints(n: usize, values: impl IntoIterator<Item = i64>) -> Self {
        let n = n as i64;
        ResidueSet::new(values.into_iter().map(|v| v.rem_euclid(n) as usize).collect())
    }

    /// The residues whose bit is set in `mask` (bit `i` stands for residue `i`).
    pub fn from_mask(mask: u64) -> Self {
        ResidueSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.0.binary_search(&r).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Bit mask of the residues; only meaningful when every residue is below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &r| m | 1 << r)
    }

    pub fn negated(&self, n: usize) -> Self {
        ResidueSet::new(self.0.iter().map(|&r| (n - r) % n).collect())
    }

    pub fn is_symmetric(&self, n: usize) -> bool {
        self.0.iter().all(|&r| self.contains((n - r) % n))
    }

    pub fn scaled(&self, a: usize, n: usize) -> Self {
        ResidueSet::new(self.0.iter().map(|&r| r * a % n).collect())
    }

    pub fn translated(&self, c: usize, n: usize) -> Self {
        ResidueSet::new(self.0.iter().map(|&r| (r + c) % n).collect())
    }

    /// `Z_n \ A`.
    pub fn complement(&self, n: usize) -> Self {
        ResidueSet((0..n).filter(|&r| !self.contains(r)).collect())
    }

    /// `Z_n^# \ A`, the nonzero residues missing from the set.
    pub fn hat(&self, n: usize) -> Self {
        ResidueSet((1..n).filter(|&r| !self.contains(r)).collect())
    }

    fn check(&self, n: usize, name: &str, symmetric: bool) -> Result<()> {
        if let Some(&r) = self.0.iter().find(|&&r| r >= n) {
            return Err(Error::InvalidSymbol(format!("{name} contains {r}, not reduced mod {n}")));
        }
        if symmetric {
            if self.contains(0) {
                return Err(Error::InvalidSymbol(format!("{name} contains 0")));
            }
            if !self.is_symmetric(n) {
                return Err(Error::InvalidSymbol(format!("{name} = {{{self}}} is not closed under negation mod {n}")));
            }
        }
        Ok(())
    }

    fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(ResidueSet::default());
        }
        let values = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidSymbol(format!("bad residue `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ResidueSet::from_ints(n, values))
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromIterator<usize> for ResidueSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ResidueSet::new(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSymbol {
    pub n: usize,
    pub s: ResidueSet,
}

impl CirculantSymbol {
    pub fn new(n: usize, s: ResidueSet) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSymbol(format!("circulant modulus must be at least 2, got {n}")));
        }
        s.check(n, "S", true)?;
        Ok(CirculantSymbol { n, s })
    }
}

/// The symbol `[S, S', T]` of an `n`-bicirculant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BicirculantSymbol {
    pub n: usize,
    pub s: ResidueSet,
    pub sp: ResidueSet,
    pub t: ResidueSet,
}

impl BicirculantSymbol {
    pub fn new(n: usize, s: ResidueSet, sp: ResidueSet, t: ResidueSet) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSymbol("modulus must be positive".into()));
        }
        s.check(n, "S", true)?;
        sp.check(n, "Sp", true)?;
        t.check(n, "T", false)?;
        Ok(BicirculantSymbol { n, s, sp, t })
    }

    /// Convenience constructor from signed residues.
    pub fn from_ints(n: usize, s: &[i64], sp: &[i64], t: &[i64]) -> Result<Self> {
        Self::new(
            n,
            ResidueSet::from_ints(n, s.iter().copied()),
            ResidueSet::from_ints(n, sp.iter().copied()),
            ResidueSet::from_ints(n, t.iter().copied()),
        )
    }

    /// `Ŝ = Z_n^# \ S`.
    pub fn s_hat(&self) -> ResidueSet {
        self.s.hat(self.n)
    }

    /// Symbol of the complementary graph under the same labelling: `[Ŝ, Ŝ', T^c]`.
    pub fn complemented(&self) -> Self {
        let n = self.n;
        BicirculantSymbol { n, s: self.s.hat(n), sp: self.sp.hat(n), t: self.t.complement(n) }
    }

    /// `[aS, aS', aT]` for a unit `a`.
    pub fn scaled(&self, a: usize) -> Self {
        let n = self.n;
        BicirculantSymbol { n, s: self.s.scaled(a, n), sp: self.sp.scaled(a, n), t: self.t.scaled(a, n) }
    }

    /// `[S, S', T + c]`.
    pub fn translated(&self, c: usize) -> Self {
        BicirculantSymbol { t: self.t.translated(c, self.n), ..self.clone() }
    }

    /// Swaps the two orbits: `[S', S, -T]`.
    pub fn swapped(&self) -> Self {
        BicirculantSymbol { n: self.n, s: self.sp.clone(), sp: self.s.clone(), t: self.t.negated(self.n) }
    }
}

/// Three within-orbit sets `S0, S1, S2` and three connection sets `T01, T12, T20`.
///
/// Vertex `a*n + i` is adjacent to `(a+1 mod 3)*n + j` iff `j - i ∈ T_{a,a+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TricirculantSymbol {
    pub n: usize,
    pub s: [ResidueSet; 3],
    pub t: [ResidueSet; 3],
}

impl TricirculantSymbol {
    pub fn new(n: usize, s: [ResidueSet; 3], t: [ResidueSet; 3]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSymbol("modulus must be positive".into()));
        }
        for (i, set) in s.iter().enumerate() {
            set.check(n, &format!("S{i}"), true)?;
        }
        for (i, set) in t.iter().enumerate() {
            set.check(n, TRI_T_NAMES[i], false)?;
        }
        Ok(TricirculantSymbol { n, s, t })
    }
}

const TRI_T_NAMES: [&str; 3] = ["T01", "T12", "T20"];

/// Any of the supported symbol kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Symbol {
    Circ(CirculantSymbol),
    Bi(BicirculantSymbol),
    Tri(TricirculantSymbol),
}

impl Symbol {
    pub fn build(&self) -> Result<super::Graph> {
        match self {
            Symbol::Circ(c) => super::circulant(c.n, &c.s),
            Symbol::Bi(b) => super::bicirculant(b),
            Symbol::Tri(t) => super::tricirculant(t),
        }
    }
}

impl fmt::Display for CirculantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "circ:n={};S={}", self.n, self.s)
    }
}

impl fmt::Display for BicirculantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bi:n={};S={};Sp={};T={}", self.n, self.s, self.sp, self.t)
    }
}

impl fmt::Display for TricirculantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tri:n={};S0={};S1={};S2={};T01={};T12={};T20={}",
            self.n, self.s[0], self.s[1], self.s[2], self.t[0], self.t[1], self.t[2]
        )
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Circ(s) => s.fmt(f),
            Symbol::Bi(s) => s.fmt(f),
            Symbol::Tri(s) => s.fmt(f),
        }
    }
}

/// Splits `key=value;key=value` after the `kind:` prefix.
fn fields<'a>(body: &'a str, expected: &[&str]) -> Result<(usize, Vec<&'a str>)> {
    let mut n = None;
    let mut values = vec![None; expected.len()];
    for part in body.split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidSymbol(format!("expected key=value, got `{part}`")))?;
        let key = key.trim();
        if key == "n" {
            let parsed = value
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidSymbol(format!("bad modulus `{value}`")))?;
            if n.replace(parsed).is_some() {
                return Err(Error::InvalidSymbol("n given twice".into()));
            }
        } else if let Some(i) = expected.iter().position(|e| *e == key) {
            if values[i].replace(value).is_some() {
                return Err(Error::InvalidSymbol(format!("{key} given twice")));
            }
        } else {
            return Err(Error::InvalidSymbol(format!("unknown field `{key}`")));
        }
    }
    let n = n.ok_or_else(|| Error::InvalidSymbol("missing n".into()))?;
    if n == 0 {
        return Err(Error::InvalidSymbol("modulus must be positive".into()));
    }
    let values = values
        .into_iter()
        .zip(expected)
        .map(|(v, name)| v.ok_or_else(|| Error::InvalidSymbol(format!("missing field {name}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, values))
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (kind, body) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::InvalidSymbol(format!("missing kind prefix in `{text}`")))?;
        match kind {
            "circ" => {
                let (n, v) = fields(body, &["S"])?;
                Ok(Symbol::Circ(CirculantSymbol::new(n, ResidueSet::parse(n, v[0])?)?))
            }
            "bi" => {
                let (n, v) = fields(body, &["S", "Sp", "T"])?;
                Ok(Symbol::Bi(BicirculantSymbol::new(
                    n,
                    ResidueSet::parse(n, v[0])?,
                    ResidueSet::parse(n, v[1])?,
                    ResidueSet::parse(n, v[2])?,
                )?))
            }
            "tri" => {
                let (n, v) = fields(body, &["S0", "S1", "S2", "T01", "T12", "T20"])?;
                let p = |i: usize| ResidueSet::parse(n, v[i]);
                Ok(Symbol::Tri(TricirculantSymbol::new(n, [p(0)?, p(1)?, p(2)?], [p(3)?, p(4)?, p(5)?])?))
            }
            other => Err(Error::InvalidSymbol(format!("unknown symbol kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_clebsch_symbol() {
        let sym: Symbol = "bi:n=8;S=1,-1,4;Sp=3,-3,4;T=0,2".parse().unwrap();
        let Symbol::Bi(b) = &sym else { panic!() };
        assert_eq!(b.s.as_slice(), &[1, 4, 7]);
        assert_eq!(b.sp.as_slice(), &[3, 4, 5]);
        assert_eq!(b.t.as_slice(), &[0, 2]);
        assert_eq!(sym.to_string(), "bi:n=8;S=1,4,7;Sp=3,4,5;T=0,2");
        assert_eq!(sym.to_string().parse::<Symbol>().unwrap(), sym);
    }

    #[test]
    fn rejects_asymmetric_or_zero_sets() {
        assert!("bi:n=8;S=1;Sp=;T=".parse::<Symbol>().is_err());
        assert!("bi:n=8;S=0;Sp=;T=".parse::<Symbol>().is_err());
        assert!("circ:n=5;S=0,1,4".parse::<Symbol>().is_err());
        assert!("bi:n=8;S=1,7;Sp=;T=x".parse::<Symbol>().is_err());
        assert!("bi:n=8;S=1,7;Sp=".parse::<Symbol>().is_err());
        assert!("quad:n=8".parse::<Symbol>().is_err());
        assert!("bi:S=;Sp=;T=".parse::<Symbol>().is_err());
    }

    #[test]
    fn empty_sets_and_tricirculants() {
        let sym: Symbol = "tri:n=5;S0=1,-1;S1=;S2=2,-2;T01=0;T12=0,1;T20=3".parse().unwrap();
        assert_eq!(sym.to_string(), "tri:n=5;S0=1,4;S1=;S2=2,3;T01=0;T12=0,1;T20=3");
    }

    #[test]
    fn hat_and_complement() {
        let s = ResidueSet::new(vec![1, 4]);
        assert_eq!(s.hat(5).as_slice(), &[2, 3]);
        assert_eq!(s.complement(5).as_slice(), &[0, 2, 3]);
        assert_eq!(s.negated(5), s);
        assert_eq!(ResidueSet::new(vec![1, 2]).scaled(2, 5).as_slice(), &[2, 4]);
    }

    #[test]
    fn symbol_maps() {
        let b = BicirculantSymbol::from_ints(5, &[1, -1], &[2, -2], &[0]).unwrap();
        assert_eq!(b.s_hat(), b.sp);
        let c = b.complemented();
        assert_eq!(c.t.as_slice(), &[1, 2, 3, 4]);
        assert_eq!(b.swapped().t.as_slice(), &[0]);
        assert_eq!(b.translated(2).t.as_slice(), &[2]);
    }
}
