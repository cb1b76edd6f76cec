//! Certificate data model, fact evaluation and replay.

use super::int::Int;
use super::solver::{feasible_edge_params, feasible_local_params, LocalParamSolution};
use crate::error::{Error, Result};
use crate::graph::NamedGraph;
use crate::isoreg::edge_iso_params;
use crate::search::find_bicirculant_srg;
use crate::srg::SrgParams;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which family a certificate is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    BicircOdd,
    FamilyB,
    FamilyC,
    Tri1,
    Tri2,
}

impl Claim {
    pub const ALL: [Claim; 5] = [Claim::BicircOdd, Claim::FamilyB, Claim::FamilyC, Claim::Tri1, Claim::Tri2];

    pub fn tag(self) -> &'static str {
        match self {
            Claim::BicircOdd => "bicirc-odd",
            Claim::FamilyB => "family-b",
            Claim::FamilyC => "family-c",
            Claim::Tri1 => "tri1",
            Claim::Tri2 => "tri2",
        }
    }

    /// Certificates for the tricirculant families concern edges only.
    pub fn edge_only(self) -> bool {
        matches!(self, Claim::Tri1 | Claim::Tri2)
    }

    /// Whether the index is in the claim's domain (degenerate instances included).
    pub fn admits(self, index: i64) -> bool {
        match self {
            Claim::BicircOdd => index >= 1,
            Claim::FamilyB | Claim::FamilyC => index >= 3 && index % 2 == 1,
            Claim::Tri1 | Claim::Tri2 => true,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown claim `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    Relation,
    Divisibility,
    Inequality,
    HoffmanClique,
    SpectralInterlacing,
    GraphMeasurement,
}

impl StepKind {
    /// Steps whose validity rests on graph structure rather than integer arithmetic alone.
    pub fn is_structural(self) -> bool {
        matches!(self, StepKind::HoffmanClique | StepKind::SpectralInterlacing | StepKind::GraphMeasurement)
    }
}

/// A checkable statement. Every check is a requirement; a false one closes its case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Check {
    Eq { lhs: Int, rhs: Int },
    Le { lhs: Int, rhs: Int },
    Divides { divisor: Int, dividend: Int },
    Gcd { a: Int, b: Int, gcd: Int },
    /// Some multiple of `divisor` lies in `[lo, hi]`.
    MultipleInRange { divisor: Int, lo: Int, hi: Int },
    IsSquare { value: Int, root: Int },
    /// Some edge of the named graph is 3-isoregular.
    EdgeIsoregular { graph: String },
    /// Every edge of the named graph is 3-isoregular with the given `(Q, R, W)`.
    EdgeParams { graph: String, q: u64, r: u64, w: u64 },
    /// Some bicirculant on `Z_n` with `|S| = |S'| = s_size` and `|T| = t_size` has parameters `params`.
    BicirculantSrg { n: u64, s_size: u64, t_size: u64, params: SrgParams },
}

impl Check {
    pub fn evaluate(&self) -> Result<bool> {
        let b = |v: &Int| v.0.clone();
        Ok(match self {
            Check::Eq { lhs, rhs } => lhs == rhs,
            Check::Le { lhs, rhs } => lhs <= rhs,
            Check::Divides { divisor, dividend } => {
                if divisor.is_zero() {
                    dividend.is_zero()
                } else {
                    (b(dividend) % b(divisor)).is_zero()
                }
            }
            Check::Gcd { a, b: bb, gcd } => a.0.gcd(&bb.0) == gcd.0,
            Check::MultipleInRange { divisor, lo, hi } => {
                let d = divisor.abs();
                if d.is_zero() {
                    lo.0 <= BigInt::zero() && BigInt::zero() <= hi.0
                } else {
                    // smallest multiple ≥ lo
                    let first = b(lo).div_ceil(&d) * &d;
                    lo <= hi && first <= hi.0
                }
            }
            Check::IsSquare { value, root } => !value.is_negative() && !root.is_negative() && &root.0 * &root.0 == value.0 && value.0.sqrt() == root.0,
            Check::EdgeIsoregular { graph } => {
                let g = graph.parse::<NamedGraph>()?.build()?;
                let mut any = false;
                for (x, y) in g.edges() {
                    if edge_iso_params(&g, x, y)?.is_some() {
                        any = true;
                        break;
                    }
                }
                any
            }
            Check::EdgeParams { graph, q, r, w } => {
                let g = graph.parse::<NamedGraph>()?.build()?;
                let mut all = g.edge_count() > 0;
                for (x, y) in g.edges() {
                    match edge_iso_params(&g, x, y)? {
                        Some(p) if (p.q, p.r, p.w) == (*q, *r, *w) => {}
                        _ => {
                            all = false;
                            break;
                        }
                    }
                }
                all
            }
            Check::BicirculantSrg { n, s_size, t_size, params } => {
                find_bicirculant_srg(*n as usize, *s_size as usize, *t_size as usize, *params)?.is_some()
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub what: String,
    pub check: Check,
    pub holds: bool,
}

impl Fact {
    pub fn new(what: impl Into<String>, check: Check) -> Result<Self> {
        let holds = check.evaluate()?;
        Ok(Fact { what: what.into(), check, holds })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    /// The case this step works in, e.g. `α = m`.
    pub case: String,
    pub claim: String,
    pub facts: Vec<Fact>,
    /// Some fact failed, so the case is impossible.
    pub closes: bool,
    /// The local-parameter tuple this step rules out, when it rules out one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excludes: Option<LocalParamSolution>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Every case is closed; `step` is the one closing the last open case.
    Contradiction { step: usize },
    /// A tuple survives every step.
    Solution { solution: LocalParamSolution },
    /// The instance is outside the argument's hypotheses.
    Degenerate { reason: String },
}

impl Verdict {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, Verdict::Contradiction { .. })
    }

    pub fn solution(&self) -> Option<&LocalParamSolution> {
        match self {
            Verdict::Solution { solution } => Some(solution),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: Claim,
    pub index: i64,
    pub params: Option<SrgParams>,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
    /// Output of the independent solver on `params`.
    pub oracle: Vec<LocalParamSolution>,
}

/// A run of certificates over an index range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBatch {
    pub claim: Claim,
    pub lo: i64,
    pub hi: i64,
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub certificates: usize,
    pub contradictions: usize,
    pub solutions: usize,
    pub degenerate: usize,
    pub failures: Vec<String>,
}

impl ReplayReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub(crate) fn oracle_for(claim: Claim, params: &SrgParams) -> Result<Vec<LocalParamSolution>> {
    if claim.edge_only() {
        feasible_edge_params(params)
    } else {
        feasible_local_params(params)
    }
}

/// Re-checks one certificate: facts, structure, determinism and oracle agreement.
pub fn replay_certificate(cert: &Certificate) -> Vec<String> {
    let mut failures = Vec::new();
    let tag = format!("{} #{}", cert.claim, cert.index);
    for (i, step) in cert.steps.iter().enumerate() {
        for fact in &step.facts {
            match fact.check.evaluate() {
                Ok(h) if h == fact.holds => {}
                Ok(h) => failures.push(format!("{tag}: step {i} fact `{}` recorded {} but evaluates {h}", fact.what, fact.holds)),
                Err(e) => failures.push(format!("{tag}: step {i} fact `{}` failed to evaluate: {e}", fact.what)),
            }
        }
        let closes = step.facts.iter().any(|f| !f.holds);
        if closes != step.closes {
            failures.push(format!("{tag}: step {i} closure flag disagrees with its facts"));
        }
    }
    match &cert.verdict {
        Verdict::Contradiction { step } => match cert.steps.get(*step) {
            Some(s) if s.closes => {}
            _ => failures.push(format!("{tag}: contradiction step {step} does not close a case")),
        },
        Verdict::Solution { .. } | Verdict::Degenerate { .. } => {}
    }
    match super::certify::certify(cert.claim, cert.index) {
        Ok(fresh) => {
            let a = serde_json::to_string(&fresh).unwrap_or_default();
            let b = serde_json::to_string(cert).unwrap_or_default();
            if a != b {
                failures.push(format!("{tag}: re-running the certifier gives a different certificate"));
            }
        }
        Err(e) => failures.push(format!("{tag}: certifier failed on replay: {e}")),
    }
    let degenerate = matches!(cert.verdict, Verdict::Degenerate { .. });
    if let (Some(params), false) = (&cert.params, degenerate) {
        match oracle_for(cert.claim, params) {
            Ok(oracle) => {
                if oracle != cert.oracle {
                    failures.push(format!("{tag}: recorded oracle output differs from the solver"));
                }
                failures.extend(oracle_agreement(cert, &oracle).into_iter().map(|m| format!("{tag}: {m}")));
            }
            Err(e) => failures.push(format!("{tag}: oracle failed: {e}")),
        }
    }
    failures
}

/// Every oracle solution must be the certified solution or be ruled out by a structural step.
fn oracle_agreement(cert: &Certificate, oracle: &[LocalParamSolution]) -> Vec<String> {
    let mut out = Vec::new();
    if matches!(cert.verdict, Verdict::Degenerate { .. }) {
        return out;
    }
    for sol in oracle {
        let certified = cert.verdict.solution().is_some_and(|s| s.matches(sol));
        let excluded = cert
            .steps
            .iter()
            .any(|s| s.closes && s.kind.is_structural() && s.excludes.as_ref().is_some_and(|e| e.matches(sol)));
        if !certified && !excluded {
            out.push(format!("oracle solution ({},{},{},{:?}) is not accounted for", sol.q, sol.r, sol.w, sol.v));
        }
    }
    if let Some(s) = cert.verdict.solution() {
        if !oracle.iter().any(|o| o.matches(s)) {
            out.push("certified solution is missing from the oracle output".into());
        }
    }
    out
}

pub fn replay_batch(batch: &CertificateBatch) -> ReplayReport {
    let mut report = ReplayReport { certificates: batch.certificates.len(), ..Default::default() };
    for cert in &batch.certificates {
        if cert.claim != batch.claim {
            report.failures.push(format!("{} #{}: claim differs from the batch", cert.claim, cert.index));
        }
        if cert.index < batch.lo || cert.index > batch.hi {
            report.failures.push(format!("{} #{}: index outside the batch range", cert.claim, cert.index));
        }
        match cert.verdict {
            Verdict::Contradiction { .. } => report.contradictions += 1,
            Verdict::Solution { .. } => report.solutions += 1,
            Verdict::Degenerate { .. } => report.degenerate += 1,
        }
        report.failures.extend(replay_certificate(cert));
    }
    let expected: Vec<i64> = (batch.lo..=batch.hi).filter(|&i| batch.claim.admits(i)).collect();
    let got: Vec<i64> = batch.certificates.iter().map(|c| c.index).collect();
    if expected != got {
        report.failures.push("batch does not cover its range exactly once in order".into());
    }
    report
}
