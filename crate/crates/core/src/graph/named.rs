use super::symbol::{BicirculantSymbol, ResidueSet};
use super::{bicirculant, circulant, gq22_voltage, paley, triangular, Graph};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Registry of the small graphs used throughout the checks, addressable by tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    C5,
    Petersen,
    Clebsch,
    K4xK4,
    ShrikhandeA,
    ShrikhandeB,
    GQ22,
    T6Complement,
    T7,
    Paley(usize),
}

impl NamedGraph {
    /// Every tag with a fixed construction, plus the two smallest nontrivial Paley graphs.
    pub const CORPUS: [NamedGraph; 11] = [
        NamedGraph::C5,
        NamedGraph::Petersen,
        NamedGraph::Clebsch,
        NamedGraph::K4xK4,
        NamedGraph::ShrikhandeA,
        NamedGraph::ShrikhandeB,
        NamedGraph::GQ22,
        NamedGraph::T6Complement,
        NamedGraph::T7,
        NamedGraph::Paley(13),
        NamedGraph::Paley(17),
    ];

    /// The bicirculant symbol for tags defined by one.
    pub fn symbol(self) -> Option<BicirculantSymbol> {
        let sym = |n, s: &[i64], sp: &[i64], t: &[i64]| {
            BicirculantSymbol::from_ints(n, s, sp, t).expect("registry symbols are valid")
        };
        match self {
            NamedGraph::Petersen => Some(sym(5, &[1, -1], &[2, -2], &[0])),
            NamedGraph::Clebsch => Some(sym(8, &[1, -1, 4], &[3, -3, 4], &[0, 2])),
            NamedGraph::K4xK4 => Some(sym(8, &[1, -1], &[3, -3], &[0, 1, 3, 4])),
            NamedGraph::ShrikhandeA => Some(sym(8, &[1, -1], &[3, -3], &[0, 1, -1, 4])),
            NamedGraph::ShrikhandeB => Some(sym(8, &[1, -1, 2, -2], &[2, -2, 3, -3], &[1, 3])),
            _ => None,
        }
    }

    pub fn build(self) -> Result<Graph> {
        if let Some(sym) = self.symbol() {
            return bicirculant(&sym);
        }
        match self {
            NamedGraph::C5 => circulant(5, &ResidueSet::new(vec![1, 4])),
            NamedGraph::GQ22 => Ok(gq22_voltage()),
            NamedGraph::T6Complement => Ok(triangular(6)?.complement()),
            NamedGraph::T7 => triangular(7),
            NamedGraph::Paley(p) => paley(p),
            _ => unreachable!("symbol-defined tags handled above"),
        }
    }

    pub fn tag(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::C5 => f.write_str("c5"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Clebsch => f.write_str("clebsch"),
            NamedGraph::K4xK4 => f.write_str("k4xk4"),
            NamedGraph::ShrikhandeA => f.write_str("shrikhande-a"),
            NamedGraph::ShrikhandeB => f.write_str("shrikhande-b"),
            NamedGraph::GQ22 => f.write_str("gq22"),
            NamedGraph::T6Complement => f.write_str("t6-complement"),
            NamedGraph::T7 => f.write_str("t7"),
            NamedGraph::Paley(p) => write!(f, "paley-{p}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tag = s.trim().to_ascii_lowercase();
        let named = match tag.as_str() {
            "c5" => NamedGraph::C5,
            "petersen" => NamedGraph::Petersen,
            "clebsch" => NamedGraph::Clebsch,
            "k4xk4" | "k4□k4" => NamedGraph::K4xK4,
            "shrikhande" | "shrikhande-a" => NamedGraph::ShrikhandeA,
            "shrikhande-b" => NamedGraph::ShrikhandeB,
            "gq22" | "gq(2,2)" => NamedGraph::GQ22,
            "t6-complement" | "t6c" => NamedGraph::T6Complement,
            "t7" => NamedGraph::T7,
            other => {
                let p = other
                    .strip_prefix("paley-")
                    .or_else(|| other.strip_prefix("paley(").and_then(|r| r.strip_suffix(')')))
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| Error::UnknownGraph(s.to_string()))?;
                NamedGraph::Paley(p)
            }
        };
        Ok(named)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for g in NamedGraph::CORPUS {
            assert_eq!(g.tag().parse::<NamedGraph>().unwrap(), g);
        }
        assert_eq!("paley(29)".parse::<NamedGraph>().unwrap(), NamedGraph::Paley(29));
        assert!("heawood".parse::<NamedGraph>().is_err());
        assert!("paley-x".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn orders() {
        let orders: Vec<usize> = NamedGraph::CORPUS.iter().map(|g| g.build().unwrap().order()).collect();
        assert_eq!(orders, vec![5, 10, 16, 16, 16, 16, 15, 15, 21, 13, 17]);
        assert!(NamedGraph::Paley(7).build().is_err());
    }
}
