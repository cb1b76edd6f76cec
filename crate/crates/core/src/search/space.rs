//! Symbol spaces as bitmasks and the fast strong-regularity test on them.

use crate::srg::SrgParams;

/// Rotates the low `n` bits of `mask` by `c` positions.
#[inline]
pub(crate) fn rot(mask: u64, c: usize, n: usize) -> u64 {
    let full = low_bits(n);
    let c = c % n;
    if c == 0 {
        return mask;
    }
    ((mask << c) | (mask >> (n - c))) & full
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `-T mod n` as a mask.
pub(crate) fn neg(mask: u64, n: usize) -> u64 {
    let mut out = 0;
    for r in 0..n {
        if mask >> r & 1 == 1 {
            out |= 1 << ((n - r) % n);
        }
    }
    out
}

/// The ± pair classes of `Z_n \ {0}` as masks, the self-paired `n/2` last.
pub(crate) fn pair_classes(n: usize) -> Vec<u64> {
    let mut classes: Vec<u64> = (1..n).filter(|&r| 2 * r < n).map(|r| (1 << r) | (1 << (n - r))).collect();
    if n.is_multiple_of(2) && n >= 2 {
        classes.push(1 << (n / 2));
    }
    classes
}

/// Masks of all symmetric subsets, in increasing order of the class-choice bitmask.
pub(crate) fn symmetric_masks(n: usize, size: Option<usize>) -> Vec<u64> {
    let classes = pair_classes(n);
    (0u64..1 << classes.len())
        .map(|choice| {
            classes.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1).fold(0u64, |m, (_, c)| m | c)
        })
        .filter(|m| size.is_none_or(|s| m.count_ones() as usize == s))
        .collect()
}

/// All `n`-bit masks with exactly `c` bits, ascending.
pub(crate) fn masks_of_size(n: usize, c: usize) -> Vec<u64> {
    if c > n {
        return Vec::new();
    }
    if c == 0 {
        return vec![0];
    }
    if c == n {
        return vec![low_bits(n)];
    }
    let limit = 1u128 << n;
    let mut out = Vec::new();
    let mut v: u128 = (1u128 << c) - 1;
    while v < limit {
        out.push(v as u64);
        // Gosper's hack: next larger integer with the same popcount
        let t = v | (v - 1);
        v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i + 1) as u128)
}

/// Strong-regularity test for a graph whose rows are given as masks and
/// which has a semiregular automorphism with the given orbit representatives.
///
/// Returns the parameters when the graph is a nontrivial SRG.
fn srg_from_rows(rows: &[u64], reps: &[usize]) -> Option<SrgParams> {
    let order = rows.len();
    let k = rows[0].count_ones();
    if rows.iter().any(|r| r.count_ones() != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None::<u32>, None::<u32>);
    for &v in reps {
        let rv = rows[v];
        for (u, &ru) in rows.iter().enumerate() {
            if u == v {
                continue;
            }
            let c = (rv & ru).count_ones();
            let slot = if rv >> u & 1 == 1 { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    let p = SrgParams::new(order as u64, k as u64, lambda? as u64, mu? as u64);
    p.is_nontrivial().then_some(p)
}

/// Adjacency rows of the bicirculant `[S, S', T]` on `2n ≤ 64` vertices.
pub(crate) fn bicirculant_rows(n: usize, s: u64, sp: u64, t: u64, out: &mut Vec<u64>) {
    out.clear();
    let nt = neg(t, n);
    for i in 0..n {
        out.push(rot(s, i, n) | rot(t, i, n) << n);
    }
    for i in 0..n {
        out.push(rot(nt, i, n) | rot(sp, i, n) << n);
    }
}

pub(crate) fn bicirculant_srg(n: usize, s: u64, sp: u64, t: u64, rows: &mut Vec<u64>) -> Option<SrgParams> {
    bicirculant_rows(n, s, sp, t, rows);
    srg_from_rows(rows, &[0, n])
}

/// Adjacency rows of the tricirculant with within-orbit sets `s` and connection sets `t`.
pub(crate) fn tricirculant_rows(n: usize, s: [u64; 3], t: [u64; 3], out: &mut Vec<u64>) {
    out.clear();
    let nt = t.map(|m| neg(m, n));
    for a in 0..3 {
        let next = (a + 1) % 3;
        let prev = (a + 2) % 3;
        for i in 0..n {
            let mut row = rot(s[a], i, n) << (a * n);
            row |= rot(t[a], i, n) << (next * n);
            row |= rot(nt[prev], i, n) << (prev * n);
            out.push(row);
        }
    }
}

pub(crate) fn tricirculant_srg(n: usize, s: [u64; 3], t: [u64; 3], rows: &mut Vec<u64>) -> Option<SrgParams> {
    tricirculant_rows(n, s, t, rows);
    srg_from_rows(rows, &[0, n, 2 * n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bicirculant, BicirculantSymbol, NamedGraph};
    use crate::srg::srg_params;

    #[test]
    fn masks_by_size() {
        assert_eq!(masks_of_size(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_size(13, 4).len(), 715);
        assert_eq!(masks_of_size(64, 1).len(), 64);
        assert_eq!(binomial(13, 4), 715);
    }

    #[test]
    fn rows_agree_with_builder() {
        for tag in [NamedGraph::Petersen, NamedGraph::Clebsch, NamedGraph::ShrikhandeB] {
            let sym: BicirculantSymbol = tag.symbol().unwrap();
            let g = bicirculant(&sym).unwrap();
            let mut rows = Vec::new();
            bicirculant_rows(sym.n, sym.s.mask(), sym.sp.mask(), sym.t.mask(), &mut rows);
            for (v, r) in rows.iter().enumerate() {
                assert_eq!(g.row(v)[0], *r, "{tag} row {v}");
            }
            let p = bicirculant_srg(sym.n, sym.s.mask(), sym.sp.mask(), sym.t.mask(), &mut rows);
            assert_eq!(p, srg_params(&g));
        }
    }
}
