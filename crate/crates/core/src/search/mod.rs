//! Exhaustive searches over bicirculant and tricirculant symbol spaces.
//!
//! Candidates are enumerated as bitmasks and screened with a word-level
//! strong-regularity test. Survivors are sorted by symbol encoding before any
//! aggregation, so results do not depend on the number of worker threads.

mod classes;
mod space;

pub use classes::{closure_violations, IsoClass};

use crate::error::{invalid_arg, Error, Result};
use crate::graph::{encode_graph6, BicirculantSymbol, Graph, ResidueSet, Symbol, TricirculantSymbol};
use crate::isoreg::{iso_profile, quick_k_isoregular, IsoProfile};
use crate::srg::SrgParams;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use space::{binomial, masks_of_size, pair_classes, symmetric_masks};
use std::io::Write;

/// Largest number of candidates a single run may enumerate.
pub const CANDIDATE_CAP: u128 = 1 << 31;
/// Largest bicirculant order `2n`.
pub const BICIRCULANT_ORDER_CAP: usize = 64;
/// Largest tricirculant order `3n`.
pub const TRICIRCULANT_ORDER_CAP: usize = 40;

/// All `S ⊆ Z_n \ {0}` with `S = −S`, optionally of a fixed size.
///
/// Sets are produced in increasing order of the bitmask choosing ± classes
/// (class `{±1}` is the lowest bit, the self-paired `n/2` the highest).
pub fn symmetric_subsets(n: usize, size: Option<usize>) -> Result<impl Iterator<Item = ResidueSet>> {
    if n < 2 {
        return Err(invalid_arg(format!("symmetric subsets need n ≥ 2, got {n}")));
    }
    if pair_classes(n).len() > 40 {
        return Err(invalid_arg(format!("n = {n} has too many symmetric subsets to list")));
    }
    Ok(symmetric_masks(n, size).into_iter().map(ResidueSet::from_mask))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    /// 2 for bicirculants, 3 for tricirculants.
    pub orbits: u8,
    pub n: usize,
    pub target: Option<SrgParams>,
    /// `|S|` (bicirculants only).
    pub s_size: Option<usize>,
    /// `|S'|` (bicirculants only).
    pub sp_size: Option<usize>,
    /// `|T|` (bicirculants only).
    pub t_size: Option<usize>,
    /// Restrict to `S' = Ŝ` (bicirculants only).
    pub s_prime_hat: bool,
    pub require_3iso: bool,
    pub dedup: bool,
    /// Skip candidates that cannot be regular (or of degree `k` when a target is set).
    pub prune: bool,
}

impl SearchSpec {
    pub fn bicirculant(n: usize) -> Self {
        SearchSpec {
            orbits: 2,
            n,
            target: None,
            s_size: None,
            sp_size: None,
            t_size: None,
            s_prime_hat: false,
            require_3iso: false,
            dedup: true,
            prune: true,
        }
    }

    pub fn tricirculant(n: usize) -> Self {
        SearchSpec { orbits: 3, ..Self::bicirculant(n) }
    }

    pub fn with_target(mut self, p: SrgParams) -> Self {
        self.target = Some(p);
        self
    }

    pub fn with_iso3(mut self) -> Self {
        self.require_3iso = true;
        self
    }

    /// The structure forced on odd `n`: `[S, Ŝ, T]` with `|S| = m(m+1)`, `|T| = m²`,
    /// where `2n = (2m+1)² + 1`.
    pub fn odd_structure(mut self) -> Result<Self> {
        let m = odd_family_m(self.n).ok_or_else(|| invalid_arg(format!("2n = {} is not (2m+1)²+1", 2 * self.n)))?;
        let m = m as usize;
        self.s_size = Some(m * (m + 1));
        self.sp_size = Some(m * (m + 1));
        self.t_size = Some(m * m);
        self.s_prime_hat = true;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        match self.orbits {
            2 | 3 => {}
            o => return Err(invalid_arg(format!("orbit count must be 2 or 3, got {o}"))),
        }
        if self.n < 2 {
            return Err(invalid_arg(format!("modulus must be at least 2, got {}", self.n)));
        }
        if self.orbits == 3 && (self.s_size.is_some() || self.sp_size.is_some() || self.t_size.is_some() || self.s_prime_hat) {
            return Err(invalid_arg("cardinality constraints apply to bicirculant searches only"));
        }
        let (order, cap, what) = if self.orbits == 2 {
            (2 * self.n, BICIRCULANT_ORDER_CAP, "bicirculant order 2n")
        } else {
            (3 * self.n, TRICIRCULANT_ORDER_CAP, "tricirculant order 3n")
        };
        if order > cap {
            return Err(Error::CapExceeded {
                what: format!("{what} = {order} is above {cap}"),
                size: self.estimate_unchecked(),
                cap: CANDIDATE_CAP,
            });
        }
        Ok(())
    }

    /// Number of candidates the run would enumerate.
    pub fn estimate(&self) -> Result<u128> {
        self.validate()?;
        Ok(self.estimate_unchecked())
    }

    fn estimate_unchecked(&self) -> u128 {
        if self.orbits == 2 {
            bi_plan(self).iter().map(|e| e.count(self.n)).fold(0u128, u128::saturating_add)
        } else if 3 * self.n <= TRICIRCULANT_ORDER_CAP {
            tri_plan(self).iter().map(|e| e.count(self.n)).fold(0u128, u128::saturating_add)
        } else {
            // every symmetric triple times every connection triple
            let sym = 1u128.checked_shl(3 * pair_classes(self.n).len() as u32).unwrap_or(u128::MAX);
            sym.saturating_mul(1u128.checked_shl(3 * self.n as u32).unwrap_or(u128::MAX))
        }
    }
}

/// `m` with `2n = (2m+1)² + 1`.
pub fn odd_family_m(n: usize) -> Option<u64> {
    let v = 2 * n as u64 - 1;
    let r = num_integer::Roots::sqrt(&v);
    (r * r == v && r % 2 == 1).then(|| (r - 1) / 2)
}

fn sym_count(n: usize, d: usize) -> u128 {
    let p = (n - 1) / 2;
    let e = usize::from(n.is_multiple_of(2));
    (0..=e)
        .filter(|&x| d >= x && (d - x).is_multiple_of(2))
        .map(|x| binomial(p as u64, ((d - x) / 2) as u64))
        .sum()
}

/// Sizes `(|S|, |S'|, |T| choices)` to enumerate.
struct BiEntry {
    d: usize,
    dp: usize,
    hat: bool,
    cs: Vec<usize>,
}

impl BiEntry {
    fn count(&self, n: usize) -> u128 {
        let s = sym_count(n, self.d);
        let sp = if self.hat { 1 } else { sym_count(n, self.dp) };
        let t: u128 = self.cs.iter().map(|&c| binomial(n as u64, c as u64)).sum();
        s.saturating_mul(sp).saturating_mul(t)
    }
}

fn bi_plan(spec: &SearchSpec) -> Vec<BiEntry> {
    let n = spec.n;
    let mut out = Vec::new();
    for d in 0..n {
        if spec.s_size.is_some_and(|x| x != d) || sym_count(n, d) == 0 {
            continue;
        }
        let dps: Vec<usize> = if spec.s_prime_hat { vec![n - 1 - d] } else { (0..n).collect() };
        for dp in dps {
            if spec.sp_size.is_some_and(|x| x != dp) || sym_count(n, dp) == 0 || (spec.prune && dp != d) {
                continue;
            }
            let cs: Vec<usize> = (0..=n)
                .filter(|&c| spec.t_size.is_none_or(|x| x == c))
                .filter(|&c| !spec.prune || spec.target.is_none_or(|p| (c + d) as u64 == p.k))
                .collect();
            if !cs.is_empty() {
                out.push(BiEntry { d, dp, hat: spec.s_prime_hat, cs });
            }
        }
    }
    out
}

/// Sizes of `S0, S1, S2` and `T01, T12, T20`.
struct TriEntry {
    d: [usize; 3],
    c: [usize; 3],
}

impl TriEntry {
    fn count(&self, n: usize) -> u128 {
        let s = self.d.iter().map(|&d| sym_count(n, d)).fold(1u128, |a, b| a.saturating_mul(b));
        let t = self.c.iter().map(|&c| binomial(n as u64, c as u64)).fold(1u128, |a, b| a.saturating_mul(b));
        s.saturating_mul(t)
    }
}

fn tri_plan(spec: &SearchSpec) -> Vec<TriEntry> {
    let n = spec.n;
    let ds: Vec<usize> = (0..n).filter(|&d| sym_count(n, d) > 0).collect();
    let mut out = Vec::new();
    for &d0 in &ds {
        for &d1 in &ds {
            for &d2 in &ds {
                for c0 in 0..=n {
                    for c1 in 0..=n {
                        for c2 in 0..=n {
                            let d = [d0, d1, d2];
                            let c = [c0, c1, c2];
                            if spec.prune {
                                let deg = |a: usize| d[a] + c[a] + c[(a + 2) % 3];
                                let k = deg(0);
                                if deg(1) != k || deg(2) != k || spec.target.is_some_and(|p| p.k != k as u64) {
                                    continue;
                                }
                            }
                            out.push(TriEntry { d, c });
                        }
                    }
                }
            }
        }
    }
    out
}

/// One surviving symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub symbol: String,
    pub params: SrgParams,
    pub graph6: String,
    pub isoregular3: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<IsoProfile>,
    /// Index into [`SearchResult::classes`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub candidates: u64,
    pub srg_survivors: usize,
    pub iso3_survivors: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso_classes: Option<usize>,
    /// Classes counted up to complementation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_classes: Option<usize>,
}

/// Checks of the odd-order structure `[S, Ŝ, T]`, `2n = (2m+1)²+1`, `|T| ∈ {m², n−m²}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureCheck {
    pub checked: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub spec: SearchSpec,
    pub survivors: Vec<Survivor>,
    pub classes: Vec<IsoClass>,
    pub stats: SearchStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureCheck>,
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum Record<'a> {
    Survivor(&'a Survivor),
    Summary {
        spec: &'a SearchSpec,
        stats: &'a SearchStats,
        classes: &'a [IsoClass],
        #[serde(skip_serializing_if = "Option::is_none")]
        structure: &'a Option<StructureCheck>,
    },
}

impl SearchResult {
    /// One JSON object per survivor, then a summary record.
    pub fn write_json_lines(&self, mut w: impl Write) -> Result<()> {
        let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
        for s in &self.survivors {
            serde_json::to_writer(&mut w, &Record::Survivor(s))?;
            w.write_all(b"\n").map_err(io)?;
        }
        let summary = Record::Summary { spec: &self.spec, stats: &self.stats, classes: &self.classes, structure: &self.structure };
        serde_json::to_writer(&mut w, &summary)?;
        w.write_all(b"\n").map_err(io)
    }

    pub fn to_json_lines(&self) -> String {
        let mut buf = Vec::new();
        self.write_json_lines(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// The class whose representative or members include `g`, up to isomorphism.
    pub fn class_of(&self, g: &Graph) -> Option<usize> {
        classes::find_class(&self.classes, g)
    }
}

/// Rebuilds every survivor and compares parameters, graph6 and profile.
pub fn replay_result(result: &SearchResult) -> Vec<String> {
    replay_survivors(&result.survivors)
}

/// [`replay_result`] on bare survivor records, e.g. read back from JSON lines.
pub fn replay_survivors(survivors: &[Survivor]) -> Vec<String> {
    let mut failures = Vec::new();
    for s in survivors {
        let g = match s.symbol.parse::<Symbol>().and_then(|sym| sym.build()) {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("{}: {e}", s.symbol));
                continue;
            }
        };
        if crate::srg::srg_params(&g) != Some(s.params) {
            failures.push(format!("{}: parameters differ", s.symbol));
        }
        if encode_graph6(&g) != s.graph6 {
            failures.push(format!("{}: graph6 differs", s.symbol));
        }
        let iso = quick_k_isoregular(&g, 3).unwrap_or(false);
        if iso != s.isoregular3 {
            failures.push(format!("{}: 3-isoregularity differs", s.symbol));
        }
        if iso && iso_profile(&g, 3).ok().flatten() != s.profile {
            failures.push(format!("{}: profile differs", s.symbol));
        }
    }
    failures
}

/// Raw hit from the enumeration: masks in symbol order plus parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Hit {
    masks: [u64; 6],
    params: SrgParams,
}

fn bi_symbol(n: usize, m: &[u64; 6]) -> BicirculantSymbol {
    BicirculantSymbol { n, s: ResidueSet::from_mask(m[0]), sp: ResidueSet::from_mask(m[1]), t: ResidueSet::from_mask(m[2]) }
}

fn tri_symbol(n: usize, m: &[u64; 6]) -> TricirculantSymbol {
    let r = ResidueSet::from_mask;
    TricirculantSymbol { n, s: [r(m[0]), r(m[1]), r(m[2])], t: [r(m[3]), r(m[4]), r(m[5])] }
}

fn enumerate_bi(spec: &SearchSpec) -> (u64, Vec<Hit>) {
    let n = spec.n;
    let hat_mask = space::low_bits(n) & !1;
    let mut shards: Vec<(u64, u64, &[usize])> = Vec::new();
    let plan = bi_plan(spec);
    for e in &plan {
        for s in symmetric_masks(n, Some(e.d)) {
            if e.hat {
                shards.push((s, hat_mask & !s, &e.cs));
            } else {
                for sp in symmetric_masks(n, Some(e.dp)) {
                    shards.push((s, sp, &e.cs));
                }
            }
        }
    }
    let t_lists: Vec<Vec<u64>> = (0..=n).map(|c| masks_of_size(n, c)).collect();
    let per_shard: Vec<(u64, Vec<Hit>)> = shards
        .par_iter()
        .map(|&(s, sp, cs)| {
            let mut rows = Vec::with_capacity(2 * n);
            let mut hits = Vec::new();
            let mut count = 0u64;
            for &c in cs {
                for &t in &t_lists[c] {
                    count += 1;
                    if let Some(p) = space::bicirculant_srg(n, s, sp, t, &mut rows) {
                        if spec.target.is_none_or(|q| q == p) {
                            hits.push(Hit { masks: [s, sp, t, 0, 0, 0], params: p });
                        }
                    }
                }
            }
            (count, hits)
        })
        .collect();
    collect_hits(per_shard)
}

fn enumerate_tri(spec: &SearchSpec) -> (u64, Vec<Hit>) {
    let n = spec.n;
    let plan = tri_plan(spec);
    let sym_lists: Vec<Vec<u64>> = (0..n).map(|d| symmetric_masks(n, Some(d))).collect();
    let t_lists: Vec<Vec<u64>> = (0..=n).map(|c| masks_of_size(n, c)).collect();
    let mut shards: Vec<([u64; 3], [usize; 3])> = Vec::new();
    for e in &plan {
        for &s0 in &sym_lists[e.d[0]] {
            for &s1 in &sym_lists[e.d[1]] {
                for &s2 in &sym_lists[e.d[2]] {
                    shards.push(([s0, s1, s2], e.c));
                }
            }
        }
    }
    let per_shard: Vec<(u64, Vec<Hit>)> = shards
        .par_iter()
        .map(|&(s, c)| {
            let mut rows = Vec::with_capacity(3 * n);
            let mut hits = Vec::new();
            let mut count = 0u64;
            for &t0 in &t_lists[c[0]] {
                for &t1 in &t_lists[c[1]] {
                    for &t2 in &t_lists[c[2]] {
                        count += 1;
                        if let Some(p) = space::tricirculant_srg(n, s, [t0, t1, t2], &mut rows) {
                            if spec.target.is_none_or(|q| q == p) {
                                hits.push(Hit { masks: [s[0], s[1], s[2], t0, t1, t2], params: p });
                            }
                        }
                    }
                }
            }
            (count, hits)
        })
        .collect();
    collect_hits(per_shard)
}

fn collect_hits(per_shard: Vec<(u64, Vec<Hit>)>) -> (u64, Vec<Hit>) {
    let total = per_shard.iter().map(|(c, _)| c).sum();
    let mut hits: Vec<Hit> = per_shard.into_iter().flat_map(|(_, h)| h).collect();
    hits.sort_unstable();
    (total, hits)
}

/// Runs a search described by `spec`.
pub fn search(spec: &SearchSpec) -> Result<SearchResult> {
    let estimate = spec.estimate()?;
    if estimate > CANDIDATE_CAP {
        return Err(Error::CapExceeded { what: format!("{}-orbit search at n = {}", spec.orbits, spec.n), size: estimate, cap: CANDIDATE_CAP });
    }
    let (candidates, hits) = if spec.orbits == 2 { enumerate_bi(spec) } else { enumerate_tri(spec) };
    let srg_survivors = hits.len();
    let n = spec.n;
    let built: Vec<(Symbol, Graph, SrgParams)> = hits
        .par_iter()
        .map(|h| {
            let sym = if spec.orbits == 2 { Symbol::Bi(bi_symbol(n, &h.masks)) } else { Symbol::Tri(tri_symbol(n, &h.masks)) };
            let g = sym.build().expect("enumerated symbols are valid");
            (sym, g, h.params)
        })
        .collect();
    let checked: Vec<(bool, Option<IsoProfile>)> = built
        .par_iter()
        .map(|(_, g, _)| {
            let iso = quick_k_isoregular(g, 3).expect("k = 3 is supported");
            let profile = if iso { iso_profile(g, 3).expect("k = 3 is supported") } else { None };
            (iso, profile)
        })
        .collect();
    let iso3_survivors = checked.iter().filter(|(iso, _)| *iso).count();
    let structure = (spec.orbits == 2 && n % 2 == 1).then(|| odd_structure_check(n, &built));
    let mut kept = Vec::new();
    let mut graphs = Vec::new();
    for ((sym, g, params), (iso, profile)) in built.into_iter().zip(checked) {
        if spec.require_3iso && !iso {
            continue;
        }
        kept.push(Survivor { symbol: sym.to_string(), params, graph6: encode_graph6(&g), isoregular3: iso, profile, class: None });
        graphs.push(g);
    }
    let mut stats = SearchStats { candidates, srg_survivors, iso3_survivors, ..Default::default() };
    let mut class_list = Vec::new();
    if spec.dedup {
        let (assign, cls) = classes::classify(&graphs, &kept);
        for (s, c) in kept.iter_mut().zip(assign) {
            s.class = Some(c);
        }
        stats.iso_classes = Some(cls.len());
        stats.complement_classes = Some(classes::complement_class_count(&cls));
        class_list = cls;
    }
    Ok(SearchResult { spec: spec.clone(), survivors: kept, classes: class_list, stats, structure })
}

fn odd_structure_check(n: usize, built: &[(Symbol, Graph, SrgParams)]) -> StructureCheck {
    let mut check = StructureCheck::default();
    let m = odd_family_m(n);
    for (sym, _, _) in built {
        let Symbol::Bi(b) = sym else { continue };
        check.checked += 1;
        let Some(m) = m else {
            check.violations.push(format!("{b}: 2n = {} is not (2m+1)²+1", 2 * n));
            continue;
        };
        if b.sp != b.s_hat() {
            check.violations.push(format!("{b}: S' is not Ŝ"));
        }
        let sq = (m * m) as usize;
        if b.t.len() != sq && b.t.len() != n - sq {
            check.violations.push(format!("{b}: |T| = {} is neither m² = {sq} nor n − m² = {}", b.t.len(), n - sq));
        }
    }
    check
}

/// Bicirculant search; see [`SearchSpec`].
pub fn search_bicirculant(spec: &SearchSpec) -> Result<SearchResult> {
    if spec.orbits != 2 {
        return Err(invalid_arg("search_bicirculant needs a 2-orbit spec"));
    }
    search(spec)
}

/// All tricirculants on `Z_n` with parameters `target`, pruned by vertex degree.
pub fn search_tricirculant_srg(n: usize, target: SrgParams) -> Result<SearchResult> {
    search(&SearchSpec::tricirculant(n).with_target(target))
}

/// Unconstrained odd-`n` bicirculant run: every regular `[S, S', T]`.
///
/// The result records 3-isoregular survivor counts and the odd-order structure check.
pub fn confirm_nonexistence_bicirc_odd(n: usize) -> Result<SearchResult> {
    if n.is_multiple_of(2) || !(5..=13).contains(&n) {
        return Err(invalid_arg(format!("n must be odd in 5..=13, got {n}")));
    }
    search(&SearchSpec::bicirculant(n))
}

/// First bicirculant `[S, S', T]` on `Z_n` with `|S| = |S'| = s_size`,
/// `|T| = t_size` and parameters `target`, in mask order.
///
/// `T` runs over translation-minimal masks only, since `[S, S', T + c]` is
/// isomorphic to `[S, S', T]`.
pub fn find_bicirculant_srg(n: usize, s_size: usize, t_size: usize, target: SrgParams) -> Result<Option<BicirculantSymbol>> {
    if n < 2 || 2 * n > BICIRCULANT_ORDER_CAP {
        return Err(invalid_arg(format!("bicirculant order 2n must be in 4..={BICIRCULANT_ORDER_CAP}, got {}", 2 * n)));
    }
    let ts: Vec<u64> = masks_of_size(n, t_size)
        .into_iter()
        .filter(|&t| (1..n).all(|c| space::rot(t, c, n) >= t))
        .collect();
    let ss = symmetric_masks(n, Some(s_size));
    let pairs: Vec<(u64, u64)> = ss.iter().flat_map(|&s| ss.iter().map(move |&sp| (s, sp))).collect();
    let hit = pairs.par_iter().find_map_first(|&(s, sp)| {
        let mut rows = Vec::with_capacity(2 * n);
        ts.iter().copied().find(|&t| space::bicirculant_srg(n, s, sp, t, &mut rows) == Some(target)).map(|t| (s, sp, t))
    });
    hit.map(|(s, sp, t)| {
        BicirculantSymbol::new(n, ResidueSet::from_mask(s), ResidueSet::from_mask(sp), ResidueSet::from_mask(t))
    })
    .transpose()
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool when `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(invalid_arg("--jobs must be positive")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| invalid_arg(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_subset_examples() {
        let five: Vec<String> = symmetric_subsets(5, None).unwrap().map(|s| s.to_string()).collect();
        assert_eq!(five.len(), 4);
        assert_eq!(symmetric_subsets(5, None).unwrap().next().unwrap().len(), 0);
        let eight: Vec<ResidueSet> = symmetric_subsets(8, Some(3)).unwrap().collect();
        assert_eq!(eight.len(), 3);
        assert!(eight.iter().all(|s| s.contains(4)));
        assert_eq!(symmetric_subsets(13, Some(6)).unwrap().count(), 20);
        assert_eq!(symmetric_subsets(13, Some(5)).unwrap().count(), 0);
        assert!(symmetric_subsets(1, None).is_err());
    }

    #[test]
    fn counts_match_formula() {
        for n in 2..14 {
            for d in 0..n {
                assert_eq!(symmetric_masks(n, Some(d)).len() as u128, sym_count(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn estimates() {
        let mut full = SearchSpec::bicirculant(8);
        full.prune = false;
        assert_eq!(full.estimate().unwrap(), 65_536);
        let odd = SearchSpec::bicirculant(13).with_target(SrgParams::new(26, 10, 3, 4)).odd_structure().unwrap();
        assert_eq!(odd.estimate().unwrap(), 20 * 715);
        assert!(matches!(SearchSpec::bicirculant(33).estimate(), Err(Error::CapExceeded { .. })));
        assert!(matches!(SearchSpec::tricirculant(14).estimate(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn finds_family_members() {
        let k4 = find_bicirculant_srg(8, 2, 4, SrgParams::new(16, 6, 2, 2)).unwrap().unwrap();
        let g = Symbol::Bi(k4.clone()).build().unwrap();
        assert_eq!(crate::srg::srg_params(&g), Some(SrgParams::new(16, 6, 2, 2)));
        assert!(k4.t.contains(0), "{k4}");
        assert!(find_bicirculant_srg(5, 2, 1, SrgParams::new(10, 3, 0, 1)).unwrap().is_some());
        assert!(find_bicirculant_srg(5, 2, 2, SrgParams::new(10, 3, 0, 1)).unwrap().is_none());
        assert!(find_bicirculant_srg(33, 2, 2, SrgParams::new(10, 3, 0, 1)).is_err());
    }

    #[test]
    fn petersen_run() {
        let r = search_bicirculant(&SearchSpec::bicirculant(5).with_target(SrgParams::new(10, 3, 0, 1))).unwrap();
        assert_eq!(r.stats.iso_classes, Some(1));
        assert_eq!(r.classes[0].name.as_deref(), Some("petersen"));
        assert!(replay_result(&r).is_empty());
        let s = r.structure.unwrap();
        assert!(s.checked > 0 && s.violations.is_empty());
    }

    #[test]
    fn small_tricirculant_degree_bound() {
        let r = search_tricirculant_srg(3, SrgParams::new(9, 9, 0, 0)).unwrap();
        assert!(r.survivors.is_empty());
        assert_eq!(r.stats.candidates, 0);
    }
}
