//! Certifiers replaying the non-existence arguments instance by instance.

use super::cert::{oracle_for, Certificate, CertificateBatch, Check, Claim, Fact, Step, StepKind, Verdict};
use super::families::{bicirc_odd_family, leung_ma_families, tricirc_families, LeungMaFamily};
use super::int::Int;
use super::solver::LocalParamSolution;
use crate::error::{invalid_arg, Error, Result};
use crate::search::BICIRCULANT_ORDER_CAP;
use crate::srg::{discriminant, SrgParams};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

fn eq(a: &BigInt, b: &BigInt) -> Check {
    Check::Eq { lhs: a.into(), rhs: b.into() }
}

fn le(a: &BigInt, b: &BigInt) -> Check {
    Check::Le { lhs: a.into(), rhs: b.into() }
}

fn gcd(a: &BigInt, b: &BigInt, g: i64) -> Check {
    Check::Gcd { a: a.into(), b: b.into(), gcd: Int::from(g) }
}

fn divides(d: &BigInt, x: &BigInt) -> Check {
    Check::Divides { divisor: d.into(), dividend: x.into() }
}

fn multiple_in(d: &BigInt, lo: &BigInt, hi: &BigInt) -> Check {
    Check::MultipleInRange { divisor: d.into(), lo: lo.into(), hi: hi.into() }
}

fn square(v: &BigInt, root: &BigInt) -> Check {
    Check::IsSquare { value: v.into(), root: root.into() }
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn u(v: &BigInt) -> u64 {
    v.to_u64().expect("local parameter is a non-negative machine integer")
}

/// Parameters as big integers.
struct P {
    n: BigInt,
    k: BigInt,
    l: BigInt,
    m: BigInt,
}

impl P {
    fn of(p: &SrgParams) -> Self {
        P { n: p.n.into(), k: p.k.into(), l: p.lambda.into(), m: p.mu.into() }
    }

    fn d22(&self) -> BigInt {
        &self.k * (&self.k - &self.l - 1) / &self.m - &self.k + &self.m - 1
    }

    fn relation_facts(&self, q: &BigInt, r: &BigInt, w: &BigInt, v: Option<&BigInt>) -> Vec<(String, Check)> {
        let kl1 = &self.k - &self.l - 1;
        let km = &self.k - &self.m;
        let mut out = vec![
            ("λ(λ−Q−1) = R(k−λ−1)".to_string(), eq(&(&self.l * (&self.l - q - 1)), &(r * &kl1))),
            ("λμ(k−2λ+Q) = W(k−μ)(k−λ−1)".to_string(), eq(&(&self.l * &self.m * (&self.k - 2 * &self.l + q)), &(w * &km * &kl1))),
            ("W(k−μ) = μ(λ−R)".to_string(), eq(&(w * &km), &(&self.m * (&self.l - r)))),
            ("Q ≥ 0".to_string(), le(&big(0), q)),
            ("R ≥ 0".to_string(), le(&big(0), r)),
            ("W ≥ 0".to_string(), le(&big(0), w)),
        ];
        if let Some(v) = v {
            out.push(("μ(k−2−2λ+R) = V·|D²₂|".to_string(), eq(&(&self.m * (&self.k - 2 - 2 * &self.l + r)), &(v * self.d22()))));
            out.push(("V ≥ 0".to_string(), le(&big(0), v)));
            out.push(("V ≤ μ".to_string(), le(v, &self.m)));
        }
        out
    }
}

#[derive(Default)]
struct Builder {
    steps: Vec<Step>,
}

impl Builder {
    fn push(
        &mut self,
        kind: StepKind,
        case: &str,
        claim: &str,
        facts: Vec<(String, Check)>,
        excludes: Option<LocalParamSolution>,
    ) -> Result<usize> {
        let facts = facts.into_iter().map(|(w, c)| Fact::new(w, c)).collect::<Result<Vec<_>>>()?;
        let closes = facts.iter().any(|f| !f.holds);
        self.steps.push(Step { kind, case: case.into(), claim: claim.into(), facts, closes, excludes });
        Ok(self.steps.len() - 1)
    }

    /// A step whose facts must all hold.
    fn derive(&mut self, kind: StepKind, case: &str, claim: &str, facts: Vec<(String, Check)>) -> Result<usize> {
        let i = self.push(kind, case, claim, facts, None)?;
        if self.steps[i].closes {
            return Err(Error::Certificate(format!("derivation `{claim}` has a failing fact")));
        }
        Ok(i)
    }

    /// A step that must close its case.
    fn close(
        &mut self,
        kind: StepKind,
        case: &str,
        claim: &str,
        facts: Vec<(String, Check)>,
        excludes: Option<LocalParamSolution>,
    ) -> Result<usize> {
        let i = self.push(kind, case, claim, facts, excludes)?;
        if !self.steps[i].closes {
            return Err(Error::Certificate(format!("step `{claim}` was expected to close its case")));
        }
        Ok(i)
    }

    fn finish(self, claim: Claim, index: i64, params: SrgParams, verdict: Verdict) -> Result<Certificate> {
        let oracle = oracle_for(claim, &params)?;
        Ok(Certificate { claim, index, params: Some(params), steps: self.steps, verdict, oracle })
    }
}

fn facts<const N: usize>(items: [(&str, Check); N]) -> Vec<(String, Check)> {
    items.into_iter().map(|(w, c)| (w.to_string(), c)).collect()
}

fn degenerate(claim: Claim, index: i64, params: Option<SrgParams>, reason: &str) -> Certificate {
    Certificate {
        claim,
        index,
        params,
        steps: Vec::new(),
        verdict: Verdict::Degenerate { reason: reason.into() },
        oracle: Vec::new(),
    }
}

/// Odd-order bicirculant family `(2(2m²+2m+1), m(2m+1), m²−1, m²)`.
pub fn certify_bicirc_odd(m: u64) -> Result<Certificate> {
    let claim = Claim::BicircOdd;
    let params = bicirc_odd_family(m)?.params;
    if m == 1 {
        return Ok(degenerate(claim, 1, Some(params), "m = 1 is the Petersen graph, which has no 3-isoregular non-edge"));
    }
    let p = P::of(&params);
    let mm = big(m);
    let sq = &mm * &mm;
    let mut b = Builder::default();
    b.derive(
        StepKind::Divisibility,
        "all",
        "λ(λ−Q−1) = R(k−λ−1) gives R = (m−1)(m²−2−Q)/m; as gcd(m, m−1) = 1, Q+2 = αm with 1 ≤ α ≤ m and R = (m−1)(m−α)",
        facts([
            ("k−λ−1 = m(m+1)", eq(&(&p.k - &p.l - 1), &(&mm * (&mm + 1)))),
            ("λ = (m−1)(m+1)", eq(&p.l, &((&mm - 1) * (&mm + 1)))),
            ("gcd(m, m−1) = 1", gcd(&mm, &(&mm - 1), 1)),
        ]),
    )?;
    let disc = big(discriminant(&params));
    let t = &mm + 1;
    b.close(
        StepKind::HoffmanClique,
        "α = m",
        "Q = λ−1, so D¹₁ ∪ {x, y} is a clique of size m²+1; the smallest eigenvalue is −(m+1) and the clique exceeds 1 + k/(m+1)",
        facts([
            ("(λ−μ)²+4(k−μ) = (2m+1)²", square(&disc, &(2 * &mm + 1))),
            ("Q = m²−2 equals λ−1", eq(&(&sq - 2), &(&p.l - 1))),
            ("(m²+1−1)(m+1) ≤ k", le(&(&sq * &t), &p.k)),
        ]),
        Some(LocalParamSolution::new(m * m - 2, 0, m * (m - 1), None).with_trace("alpha", m)),
    )?;
    let wnum = &mm * (&mm - 1);
    if m.is_multiple_of(2) {
        let i = b.close(
            StepKind::Divisibility,
            "1 ≤ α ≤ m−1",
            "W(k−μ) = μ(λ−R) gives W = (α+1)(m−1)m/(m+1); gcd(m+1, m(m−1)) = 1 so m+1 divides α+1 ∈ [2, m]",
            facts([
                ("gcd(m+1, m(m−1)) = 1", gcd(&t, &wnum, 1)),
                ("some multiple of m+1 in [2, m]", multiple_in(&t, &big(2), &mm)),
            ]),
            None,
        )?;
        return b.finish(claim, m as i64, params, Verdict::Contradiction { step: i });
    }
    let half = &t / 2;
    b.derive(
        StepKind::Divisibility,
        "1 ≤ α ≤ m−1",
        "W = (α+1)(m−1)m/(m+1); gcd(m+1, m(m−1)) = 2 so (m+1)/2 divides α+1 ∈ [2, m]",
        facts([
            ("gcd(m+1, m(m−1)) = 2", gcd(&t, &wnum, 2)),
            ("some multiple of (m+1)/2 in [2, m]", multiple_in(&half, &big(2), &mm)),
        ]),
    )?;
    b.close(
        StepKind::Inequality,
        "α+1 = j(m+1)/2 with j ≥ 2",
        "the second multiple of (m+1)/2 already exceeds m",
        facts([("m+1 ≤ m", le(&t, &mm))]),
        None,
    )?;
    let alpha = (&mm - 1) / 2;
    let q = (&sq - &mm - 4) / 2;
    let r = (&sq - 1) / 2;
    let w = &mm * (&mm - 1) / 2;
    let mut rel = p.relation_facts(&q, &r, &w, None);
    rel.push(("α = (m−1)/2 gives Q+2 = αm".into(), eq(&(&q + 2), &(&alpha * &mm))));
    b.derive(StepKind::Relation, "α = (m−1)/2", "Q = (m²−m−4)/2, R = (m²−1)/2, W = m(m−1)/2 satisfy the edge relations", rel)?;
    let d22 = p.d22();
    let i = b.close(
        StepKind::Divisibility,
        "α = (m−1)/2",
        "μ(k−2−2λ+R) = V·|D²₂| with |D²₂| = m(m+2) has no integer solution V",
        facts([
            ("|D²₂| = m(m+2)", eq(&d22, &(&mm * (&mm + 2)))),
            ("|D²₂| divides μ(k−2−2λ+R)", divides(&d22, &(&p.m * (&p.k - 2 - 2 * &p.l + &r)))),
        ]),
        None,
    )?;
    b.finish(claim, m as i64, params, Verdict::Contradiction { step: i })
}

fn even_family_params(m: u64, family: LeungMaFamily) -> Result<SrgParams> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(invalid_arg(format!("family certificates need an odd m ≥ 3, got {m}")));
    }
    leung_ma_families(m)
        .into_iter()
        .find(|t| t.family == family)
        .map(|t| t.params)
        .ok_or_else(|| invalid_arg(format!("m = {m} is below the family bound")))
}

/// Family (b): `(4m², 2m²−m, m²−m, m²−m)` for odd `m`.
pub fn certify_family_b(m: u64) -> Result<Certificate> {
    let params = even_family_params(m, LeungMaFamily::B)?;
    let p = P::of(&params);
    let mm = big(m);
    let sq = &mm * &mm;
    let mut b = Builder::default();
    b.derive(
        StepKind::Divisibility,
        "all",
        "Q = m²−m−1 − (m+1)R/m, W = (m−1)² − (m−1)R/m, V = m(m−2+R)/(m+2); gcd(m, m+1) = 1 so R = αm",
        facts([
            ("k−λ−1 = m²−1", eq(&(&p.k - &p.l - 1), &(&sq - 1))),
            ("k−μ = m²", eq(&(&p.k - &p.m), &sq)),
            ("|D²₂| = (m+2)(m−1)", eq(&p.d22(), &((&mm + 2) * (&mm - 1)))),
            ("gcd(m, m+1) = 1", gcd(&mm, &(&mm + 1), 1)),
        ]),
    )?;
    b.close(
        StepKind::Inequality,
        "α ≥ m−1",
        "Q ≥ 0 needs (m+1)α ≤ m²−m−1",
        facts([("(m+1)(m−1) ≤ m²−m−1", le(&((&mm + 1) * (&mm - 1)), &(&sq - &mm - 1)))]),
        None,
    )?;
    let i = b.close(
        StepKind::Divisibility,
        "0 ≤ α ≤ m−2",
        "V = m + m(αm−4)/(m+2); gcd(m, m+2) = 1 and gcd(2, m+2) = 1 force m+2 | α+2 with α+2 ∈ [2, m]",
        facts([
            ("gcd(m, m+2) = 1", gcd(&mm, &(&mm + 2), 1)),
            ("gcd(2, m+2) = 1", gcd(&big(2), &(&mm + 2), 1)),
            ("some multiple of m+2 in [2, m]", multiple_in(&(&mm + 2), &big(2), &mm)),
        ]),
        None,
    )?;
    b.finish(Claim::FamilyB, m as i64, params, Verdict::Contradiction { step: i })
}

/// Family (c): `(4m², 2m²+m, m²+m, m²+m)` for odd `m`.
pub fn certify_family_c(m: u64) -> Result<Certificate> {
    let params = even_family_params(m, LeungMaFamily::C)?;
    let p = P::of(&params);
    let mm = big(m);
    let sq = &mm * &mm;
    let mut b = Builder::default();
    b.derive(
        StepKind::Divisibility,
        "all",
        "Q = m²+m−1 − (m−1)R/m, W = (m+1)² − (m+1)R/m, V = m(R−m−2)/(m−2); gcd(m, m−1) = 1 so R = αm",
        facts([
            ("k−λ−1 = m²−1", eq(&(&p.k - &p.l - 1), &(&sq - 1))),
            ("k−μ = m²", eq(&(&p.k - &p.m), &sq)),
            ("|D²₂| = (m−2)(m+1)", eq(&p.d22(), &((&mm - 2) * (&mm + 1)))),
            ("gcd(m, m−1) = 1", gcd(&mm, &(&mm - 1), 1)),
        ]),
    )?;
    b.close(
        StepKind::Inequality,
        "α ≤ 1",
        "V ≥ 0 needs R ≥ m+2",
        facts([("m+2 ≤ m", le(&(&mm + 2), &mm))]),
        None,
    )?;
    b.close(
        StepKind::Inequality,
        "α ≥ m+1",
        "V ≤ μ needs m(R−m−2) ≤ μ(m−2), which fails from α = m+1 on",
        facts([("m((m+1)m−m−2) ≤ μ(m−2)", le(&(&mm * ((&mm + 1) * &mm - &mm - 2)), &(&p.m * (&mm - 2))))]),
        None,
    )?;
    b.close(
        StepKind::Divisibility,
        "2 < α < m",
        "gcd(m, m−2) = 1 and gcd(2, m−2) = 1 force m−2 | α−2, and α−2 ∈ [1, m−3] holds no multiple",
        facts([
            ("gcd(m, m−2) = 1", gcd(&mm, &(&mm - 2), 1)),
            ("gcd(2, m−2) = 1", gcd(&big(2), &(&mm - 2), 1)),
            ("some multiple of m−2 in [1, m−3]", multiple_in(&(&mm - 2), &big(1), &(&mm - 3))),
        ]),
        None,
    )?;
    let disc = big(discriminant(&params));
    let root = 2 * &mm;
    let (q, r, w, v) = (2 * &mm - 1, sq.clone(), &mm + 1, &mm * (&mm + 1));
    let mut hoffman = p.relation_facts(&q, &r, &w, Some(&v));
    hoffman.extend(facts([
        ("(λ−μ)²+4(k−μ) = (2m)²", square(&disc, &root)),
        ("|D¹₂| = k−μ = m²", eq(&(&p.k - &p.m), &sq)),
        ("each w ∈ D¹₂ has λ−W = m²−1 neighbours in D¹₂", eq(&(&p.l - &w), &(&sq - 1))),
        ("(|{x} ∪ D¹₂| − 1)·m ≤ k", le(&(&sq * &mm), &p.k)),
    ]));
    b.close(
        StepKind::HoffmanClique,
        "α = m",
        "(Q, R, W, V) = (2m−1, m², m+1, m(m+1)) makes {x} ∪ D¹₂ a clique of size 1+m² for a non-edge (x, z), above 1 + k/m",
        hoffman,
        Some(LocalParamSolution::new(u(&q), u(&r), u(&w), Some(u(&v))).with_trace("alpha", m)),
    )?;
    let (q, r, w, v) = (&sq - &mm + 1, 2 * &mm, &sq - 1, mm.clone());
    b.derive(
        StepKind::Relation,
        "α = 2",
        "(Q, R, W, V) = (m²−m+1, 2m, m²−1, m) satisfies every relation and bound",
        p.relation_facts(&q, &r, &w, Some(&v)),
    )?;
    let lhs = &q * &p.n - &p.k * &p.l;
    let h = &p.n - &p.l;
    let candidate = LocalParamSolution::new(u(&q), u(&r), u(&w), Some(u(&v))).with_trace("alpha", 2);
    let i = b.push(
        StepKind::SpectralInterlacing,
        "α = 2",
        "D¹₁ of an edge induces a Q-regular graph on λ vertices; interlacing with eigenvalues ±m bounds (Qn − kλ)/(n − λ) to [−m, m]",
        facts([
            ("(λ−μ)²+4(k−μ) = (2m)²", square(&disc, &root)),
            ("Qn − kλ ≤ m(n−λ)", le(&lhs, &(&mm * &h))),
            ("−m(n−λ) ≤ Qn − kλ", le(&(-&mm * &h), &lhs)),
        ]),
        Some(candidate.clone()),
    )?;
    if b.steps[i].closes {
        return b.finish(Claim::FamilyC, m as i64, params, Verdict::Contradiction { step: i });
    }
    let half = 2 * m * m;
    if 2 * half as usize > BICIRCULANT_ORDER_CAP {
        return b.finish(Claim::FamilyC, m as i64, params, Verdict::Solution { solution: candidate });
    }
    let i = b.push(
        StepKind::GraphMeasurement,
        "α = 2",
        "family (c) graphs are bicirculants on Z_{2m²} with |S| = |S′| = m²+m and |T| = m²; exhaustive enumeration (T up to translation) finds none",
        facts([(
            "some [S, S′, T] on Z_{2m²} with |S| = |S′| = m²+m, |T| = m² is strongly regular with these parameters",
            Check::BicirculantSrg { n: half, s_size: m * m + m, t_size: m * m, params },
        )]),
        Some(candidate.clone()),
    )?;
    let verdict = if b.steps[i].closes {
        Verdict::Contradiction { step: i }
    } else {
        Verdict::Solution { solution: candidate }
    };
    b.finish(Claim::FamilyC, m as i64, params, verdict)
}

/// Tricirculant family 1 `(3(12s²+9s+2), (4s+1)(3s+1), s(4s+3), s(4s+1))`, edges only.
pub fn certify_tri_family1(s: i64) -> Result<Certificate> {
    let claim = Claim::Tri1;
    let [inst, _] = tricirc_families(s);
    if s == 0 {
        return Ok(degenerate(claim, s, inst.params, "s = 0 gives 3K2, which is disconnected"));
    }
    let params = inst.params.ok_or_else(|| Error::Certificate(format!("family 1 at s = {s} is not a parameter set")))?;
    let p = P::of(&params);
    let ss = big(s);
    let a = 4 * &ss + 3;
    let c = 2 * &ss + 1;
    let mut b = Builder::default();
    b.derive(
        StepKind::Divisibility,
        "all",
        "(4s+3)(4s²+3s−1−Q) = 4(2s+1)R and gcd(4s+3, 4(2s+1)) = 1, so Q = 4s²+3s−1 − 4α(2s+1) and R = α(4s+3)",
        facts([
            ("k−λ−1 = 4s(2s+1)", eq(&(&p.k - &p.l - 1), &(4 * &ss * &c))),
            ("gcd(4s+3, 4(2s+1)) = 1", gcd(&a, &(4 * &c), 1)),
        ]),
    )?;
    b.derive(
        StepKind::Divisibility,
        "all",
        "W(2s+1) = s(4s+3)(s−α) and gcd(s(4s+3), 2s+1) = 1, so α = s − β(2s+1), W = βs(4s+3), R = −(4s+3)(2βs−s+β)",
        facts([
            ("k−μ = (4s+1)(2s+1)", eq(&(&p.k - &p.m), &((4 * &ss + 1) * &c))),
            ("gcd(s(4s+3), 2s+1) = 1", gcd(&(&ss * &a), &c, 1)),
        ]),
    )?;
    let sa = &ss * &a;
    b.close(
        StepKind::Inequality,
        "β < 0",
        "W = βs(4s+3) with s(4s+3) > 0 is negative",
        facts([("s(4s+3) ≥ 1", le(&big(1), &sa)), ("W ≥ 0 at β = −1", le(&big(0), &(-&sa)))]),
        None,
    )?;
    b.close(
        StepKind::Inequality,
        "β = 0",
        "Q = −(4s²+s+1) is negative",
        facts([("Q ≥ 0 at β = 0", le(&big(0), &(big(-1) * (4 * &ss * &ss + &ss + 1))))]),
        None,
    )?;
    let r_at = |beta: i64| -(&a) * (&c * beta - &ss);
    let ac = &a * &c;
    if s != -1 {
        let i = b.close(
            StepKind::Inequality,
            "β ≥ 1",
            "R = −(4s+3)((2s+1)β − s) is non-increasing in β and already negative at β = 1",
            facts([("(4s+3)(2s+1) ≥ 1", le(&big(1), &ac)), ("R ≥ 0 at β = 1", le(&big(0), &r_at(1)))]),
            None,
        )?;
        return b.finish(claim, s, params, Verdict::Contradiction { step: i });
    }
    b.close(
        StepKind::Inequality,
        "β ≥ 2",
        "R = −(4s+3)((2s+1)β − s) is non-increasing in β and negative at β = 2",
        facts([("(4s+3)(2s+1) ≥ 1", le(&big(1), &ac)), ("R ≥ 0 at β = 2", le(&big(0), &r_at(2)))]),
        None,
    )?;
    let (q, r, w) = (big(0), big(0), big(1));
    let mut rel = p.relation_facts(&q, &r, &w, None);
    rel.push(("Q ≤ λ−1".into(), le(&q, &(&p.l - 1))));
    b.derive(StepKind::Relation, "β = 1", "s = −1, β = 1 gives (Q, R, W) = (0, 0, 1)", rel)?;
    b.derive(
        StepKind::GraphMeasurement,
        "β = 1",
        "the parameters (15, 6, 1, 3) are realised by the complement of T(6), whose edges are all 3-isoregular with (0, 0, 1)",
        facts([("every edge of complement(T(6)) has (Q, R, W) = (0, 0, 1)", Check::EdgeParams {
            graph: "t6-complement".into(),
            q: 0,
            r: 0,
            w: 1,
        })]),
    )?;
    let solution = LocalParamSolution::new(0, 0, 1, None).with_trace("alpha", 0).with_trace("beta", 1);
    b.finish(claim, s, params, Verdict::Solution { solution })
}

/// Tricirculant family 2 `(3(3s²−3s+1), s(3s−1), s²+s−1, s²)`, edges only.
pub fn certify_tri_family2(s: i64) -> Result<Certificate> {
    let claim = Claim::Tri2;
    let [_, inst] = tricirc_families(s);
    match s {
        1 => return Ok(degenerate(claim, s, inst.params, "s = 1 gives K3 on a single orbit")),
        0 | -1 => return Ok(degenerate(claim, s, inst.params, "λ = −1")),
        _ => {}
    }
    let params = inst.params.ok_or_else(|| Error::Certificate(format!("family 2 at s = {s} is not a parameter set")))?;
    let p = P::of(&params);
    let ss = big(s);
    let f = &ss * &ss + &ss - 1;
    let e = 2 * &ss * (&ss - 1);
    let c = 2 * &ss - 1;
    let mut b = Builder::default();
    b.derive(
        StepKind::Divisibility,
        "all",
        "(s²+s−1)(s²+s−2−Q) = 2s(s−1)R and gcd(s²+s−1, 2s(s−1)) = 1, so Q = s²+s−2 − 2αs(s−1), R = α(s²+s−1) with α ≥ 0",
        facts([
            ("k−λ−1 = 2s(s−1)", eq(&(&p.k - &p.l - 1), &e)),
            ("gcd(s²+s−1, 2s(s−1)) = 1", gcd(&f, &e, 1)),
            ("s²+s−1 ≥ 1", le(&big(1), &f)),
        ]),
    )?;
    let sfc = &ss * &f * &c;
    b.close(
        StepKind::Inequality,
        "α ≥ 2",
        "W(2s−1) = −(α−1)s(s²+s−1) and s(s²+s−1)/(2s−1) > 0, so W < 0",
        facts([
            ("k−μ = s(2s−1)", eq(&(&p.k - &p.m), &(&ss * &c))),
            ("s(s²+s−1)(2s−1) ≥ 1", le(&big(1), &sfc)),
            ("W(2s−1)² ≥ 0 at α = 2", le(&big(0), &(-&sfc))),
        ]),
        None,
    )?;
    let q1: BigInt = big(-1) * (&ss - 1) * (&ss - 2);
    if s == 2 {
        b.close(
            StepKind::GraphMeasurement,
            "α = 1",
            "Q = 0 at s = 2; (21, 10, 5, 4) is realised only by T(7), none of whose edges is 3-isoregular",
            facts([
                ("Q = −(s−1)(s−2) = 0", eq(&q1, &big(0))),
                ("some edge of T(7) is 3-isoregular", Check::EdgeIsoregular { graph: "t7".into() }),
            ]),
            Some(LocalParamSolution::new(0, u(&f), 0, None).with_trace("alpha", 1)),
        )?;
    } else {
        b.close(
            StepKind::Inequality,
            "α = 1",
            "Q = −(s−1)(s−2) is negative unless s ∈ {1, 2}",
            facts([("Q ≥ 0 at α = 1", le(&big(0), &q1))]),
            None,
        )?;
    }
    let i = b.close(
        StepKind::Divisibility,
        "α = 0",
        "W = s(s²+s−1)/(2s−1), and 8s(s²+s−1) = (2s−1)(4s²+6s−1) − 1 leaves 2s−1 | 1",
        facts([
            ("8s(s²+s−1) = (2s−1)(4s²+6s−1) − 1", eq(&(8 * &ss * &f), &(&c * (4 * &ss * &ss + 6 * &ss - 1) - 1))),
            ("2s−1 divides s(s²+s−1)", divides(&c, &(&ss * &f))),
            ("2s−1 divides 1", divides(&c, &big(1))),
        ]),
        None,
    )?;
    b.finish(claim, s, params, Verdict::Contradiction { step: i })
}

/// Dispatches to the certifier for `claim` at `index`.
pub fn certify(claim: Claim, index: i64) -> Result<Certificate> {
    let unsigned = || u64::try_from(index).map_err(|_| invalid_arg(format!("{claim} needs a positive index")));
    match claim {
        Claim::BicircOdd => certify_bicirc_odd(unsigned()?),
        Claim::FamilyB => certify_family_b(unsigned()?),
        Claim::FamilyC => certify_family_c(unsigned()?),
        Claim::Tri1 => certify_tri_family1(index),
        Claim::Tri2 => certify_tri_family2(index),
    }
}

/// Certificates for every admissible index in `[lo, hi]`, ordered by index.
///
/// Indices outside the claim's domain (e.g. even `m` for families (b) and (c)) are skipped.
pub fn certify_range(claim: Claim, lo: i64, hi: i64) -> Result<CertificateBatch> {
    if lo > hi {
        return Err(invalid_arg(format!("empty range {lo}..{hi}")));
    }
    let indices: Vec<i64> = (lo..=hi).filter(|&i| claim.admits(i)).collect();
    let certificates = indices.into_par_iter().map(|i| certify(claim, i)).collect::<Result<Vec<_>>>()?;
    Ok(CertificateBatch { claim, lo, hi, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paramtheory::cert::replay_certificate;

    #[test]
    fn bicirc_three() {
        let c = certify_bicirc_odd(3).unwrap();
        assert!(c.verdict.is_contradiction());
        let last = c.steps.last().unwrap();
        assert_eq!(last.kind, StepKind::Divisibility);
        let Check::Divides { divisor, dividend } = &last.facts[1].check else { panic!() };
        assert_eq!((divisor.to_string(), dividend.to_string()), ("15".into(), "63".into()));
        assert!(replay_certificate(&c).is_empty());
    }

    #[test]
    fn bicirc_two_uses_clique_step() {
        let c = certify_bicirc_odd(2).unwrap();
        assert_eq!(c.oracle, vec![LocalParamSolution::new(2, 0, 2, Some(1))]);
        assert!(replay_certificate(&c).is_empty(), "{:?}", replay_certificate(&c));
        assert!(matches!(certify_bicirc_odd(1).unwrap().verdict, Verdict::Degenerate { .. }));
        assert!(certify_bicirc_odd(0).is_err());
    }

    #[test]
    fn family_b_three() {
        let c = certify_family_b(3).unwrap();
        assert!(c.verdict.is_contradiction());
        assert!(c.oracle.is_empty());
        assert!(replay_certificate(&c).is_empty());
        assert!(certify_family_b(4).is_err());
    }

    #[test]
    fn family_c_small_m_needs_enumeration() {
        let c = certify_family_c(3).unwrap();
        assert!(c.verdict.is_contradiction(), "{:?}", c.verdict);
        let interlacing = &c.steps[c.steps.len() - 2];
        assert_eq!(interlacing.kind, StepKind::SpectralInterlacing);
        assert!(!interlacing.closes);
        let last = c.steps.last().unwrap();
        assert_eq!(last.kind, StepKind::GraphMeasurement);
        let ex = last.excludes.as_ref().unwrap();
        assert_eq!((ex.q, ex.r, ex.w, ex.v), (7, 6, 8, Some(3)));
        assert!(replay_certificate(&c).is_empty(), "{:?}", replay_certificate(&c));
        let c5 = certify_family_c(5).unwrap();
        assert!(c5.verdict.is_contradiction());
        assert_eq!(c5.steps.last().unwrap().kind, StepKind::SpectralInterlacing);
        assert!(replay_certificate(&c5).is_empty());
    }

    #[test]
    fn tri_families() {
        let c = certify_tri_family1(-1).unwrap();
        let sol = c.verdict.solution().unwrap();
        assert_eq!((sol.q, sol.r, sol.w), (0, 0, 1));
        assert!(replay_certificate(&c).is_empty(), "{:?}", replay_certificate(&c));
        let c3 = certify_tri_family1(3).unwrap();
        assert!(c3.verdict.is_contradiction());
        assert!(c3.steps.iter().any(|s| s.case == "β = 0" && s.closes));
        let t2 = certify_tri_family2(2).unwrap();
        assert!(t2.verdict.is_contradiction());
        assert!(replay_certificate(&t2).is_empty(), "{:?}", replay_certificate(&t2));
        assert!(matches!(certify_tri_family2(1).unwrap().verdict, Verdict::Degenerate { .. }));
    }

    #[test]
    fn ranges_replay() {
        use crate::paramtheory::cert::replay_batch;
        for (claim, lo, hi) in [(Claim::BicircOdd, 1, 60), (Claim::FamilyB, 1, 61), (Claim::FamilyC, 1, 61), (Claim::Tri1, -30, 30), (Claim::Tri2, -30, 30)] {
            let batch = certify_range(claim, lo, hi).unwrap();
            let report = replay_batch(&batch);
            assert!(report.ok(), "{claim}: {:?}", report.failures);
            let solutions: Vec<i64> = batch.certificates.iter().filter(|c| c.verdict.solution().is_some()).map(|c| c.index).collect();
            match claim {
                Claim::FamilyC => assert!(solutions.is_empty()),
                Claim::Tri1 => assert_eq!(solutions, vec![-1]),
                _ => assert!(solutions.is_empty()),
            }
        }
    }
}
