use crate::error::{invalid_arg, Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// Bit index of the pair `(a, b)`, `a < b`, in colexicographic order.
#[inline]
pub(crate) const fn pair_bit(a: usize, b: usize) -> usize {
    b * (b - 1) / 2 + a
}

/// Adjacency code of the ordered vertex list.
pub(crate) fn raw_code(g: &Graph, vs: &[usize]) -> u8 {
    let mut code = 0u8;
    for b in 1..vs.len() {
        for a in 0..b {
            if g.has_edge(vs[a], vs[b]) {
                code |= 1 << pair_bit(a, b);
            }
        }
    }
    code
}

fn permute_code(code: u8, perm: &[usize]) -> u8 {
    let mut out = 0u8;
    for b in 1..perm.len() {
        for a in 0..b {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            if code >> pair_bit(x, y) & 1 == 1 {
                out |= 1 << pair_bit(a, b);
            }
        }
    }
    out
}

pub(crate) fn permutations(j: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, j: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == j {
            out.push(prefix.clone());
            return;
        }
        for v in 0..j {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, j, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), j, &mut out);
    out
}

/// `CANON[j][raw]` is the minimum code over all relabellings of a `j`-vertex graph.
fn canon_table() -> &'static [Vec<u8>; 5] {
    static TABLE: OnceLock<[Vec<u8>; 5]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|j| {
            let perms = permutations(j);
            let bits = j * j.saturating_sub(1) / 2;
            (0..1u16 << bits)
                .map(|raw| perms.iter().map(|p| permute_code(raw as u8, p)).min().unwrap_or(0))
                .collect()
        })
    })
}

/// Isomorphism type of a graph on at most four vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct IsoType {
    size: u8,
    code: u8,
}

impl IsoType {
    pub const K1: IsoType = IsoType { size: 1, code: 0 };
    pub const K2: IsoType = IsoType { size: 2, code: 1 };
    pub const TWO_K1: IsoType = IsoType { size: 2, code: 0 };
    pub const K3: IsoType = IsoType { size: 3, code: 0b111 };
    pub const K12: IsoType = IsoType { size: 3, code: 0b011 };
    pub const K2_K1: IsoType = IsoType { size: 3, code: 0b001 };
    pub const THREE_K1: IsoType = IsoType { size: 3, code: 0 };

    /// Canonicalises an adjacency code of `size` ordered vertices.
    pub fn from_code(size: usize, raw: u8) -> Result<Self> {
        if !(1..=4).contains(&size) {
            return Err(invalid_arg(format!("iso types are defined for 1..=4 vertices, not {size}")));
        }
        let table = &canon_table()[size];
        let code = *table
            .get(raw as usize)
            .ok_or_else(|| invalid_arg(format!("code {raw} too wide for {size} vertices")))?;
        Ok(IsoType { size: size as u8, code })
    }

    /// All types on `size` vertices, in increasing code order.
    pub fn all(size: usize) -> Vec<IsoType> {
        if !(1..=4).contains(&size) {
            return Vec::new();
        }
        let mut codes = canon_table()[size].clone();
        codes.sort_unstable();
        codes.dedup();
        codes.into_iter().map(|code| IsoType { size: size as u8, code }).collect()
    }

    pub fn size(self) -> usize {
        self.size as usize
    }

    pub fn code(self) -> u8 {
        self.code
    }

    pub fn edge_count(self) -> u32 {
        self.code.count_ones()
    }

    fn degrees(self) -> Vec<u32> {
        let j = self.size();
        let mut deg = vec![0; j];
        for b in 1..j {
            for a in 0..b {
                if self.code >> pair_bit(a, b) & 1 == 1 {
                    deg[a] += 1;
                    deg[b] += 1;
                }
            }
        }
        deg.sort_unstable();
        deg
    }

    pub fn name(self) -> &'static str {
        match (self.size, self.edge_count()) {
            (1, _) => "K1",
            (2, 0) => "2K1",
            (2, _) => "K2",
            (3, 0) => "3K1",
            (3, 1) => "K2+K1",
            (3, 2) => "K1,2",
            (3, _) => "K3",
            (4, 0) => "4K1",
            (4, 1) => "K2+2K1",
            (4, 2) if self.degrees() == [1, 1, 1, 1] => "2K2",
            (4, 2) => "K1,2+K1",
            (4, 3) => match self.degrees().as_slice() {
                [0, 2, 2, 2] => "K3+K1",
                [1, 1, 2, 2] => "P4",
                _ => "K1,3",
            },
            (4, 4) if self.degrees() == [2, 2, 2, 2] => "C4",
            (4, 4) => "paw",
            (4, 5) => "K4-e",
            _ => "K4",
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<IsoType> for String {
    fn from(t: IsoType) -> String {
        t.name().to_string()
    }
}

impl FromStr for IsoType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        (1..=4)
            .flat_map(IsoType::all)
            .find(|t| t.name() == s)
            .ok_or_else(|| invalid_arg(format!("unknown iso type `{s}`")))
    }
}

impl TryFrom<String> for IsoType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Isomorphism type of the subgraph induced on `set`.
pub fn iso_type(g: &Graph, set: &[usize]) -> Result<IsoType> {
    if set.is_empty() || set.len() > 4 {
        return Err(invalid_arg(format!("iso types need 1..=4 vertices, got {}", set.len())));
    }
    check_distinct(g, set)?;
    IsoType::from_code(set.len(), raw_code(g, set))
}

pub(crate) fn check_distinct(g: &Graph, set: &[usize]) -> Result<()> {
    for (i, &v) in set.iter().enumerate() {
        if v >= g.order() {
            return Err(invalid_arg(format!("vertex {v} out of range")));
        }
        if set[..i].contains(&v) {
            return Err(invalid_arg(format!("vertex {v} repeated")));
        }
    }
    Ok(())
}
