//! Parameter families, the local-parameter solver and replayable certificates.

mod cert;
mod certify;
mod families;
mod int;
mod solver;

pub use cert::{
    replay_batch, replay_certificate, Certificate, CertificateBatch, Check, Claim, Fact, ReplayReport, Step, StepKind,
    Verdict,
};
pub use certify::{
    certify, certify_bicirc_odd, certify_family_b, certify_family_c, certify_range, certify_tri_family1,
    certify_tri_family2,
};
pub use families::{
    bicirc_odd_family, leung_ma_families, tricirc_families, BicircOddFamily, LeungMaFamily, LeungMaTuple,
    TriFamilyInstance,
};
pub use int::Int;
pub use solver::{
    edge_relations_check, even_m_candidates, feasible_edge_params, feasible_local_params, nonedge_relations_check,
    EvenFamily, LocalParamSolution,
};
