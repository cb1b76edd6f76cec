//! Strongly regular multicirculants and their (local) 3-isoregularity.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: adjacency bit matrices, circulant/bicirculant/tricirculant
//!   constructions from residue-set symbols, named graphs, isomorphism, graph6.
//! * [`srg`]: strong regularity, parameter identities, exact eigenvalues and
//!   the Hoffman clique bound.
//! * [`isoreg`]: subset valencies, k-isoregularity, 3-isoregular edges and
//!   non-edges with their local parameters, and the t-vertex condition.
//! * [`paramtheory`]: parameter families, the local-parameter feasibility
//!   solver, and replayable non-existence certificates.
//! * [`search`]: exhaustive symbol-space searches with deterministic output.

pub mod error;
pub mod graph;
pub mod isoreg;
pub mod paramtheory;
pub mod search;
pub mod srg;

pub use error::{Error, Result};
pub use graph::{
    bicirculant, circulant, complement, decode_graph6, encode_graph6, is_isomorphic, tricirculant,
    BicirculantSymbol, Graph, NamedGraph, ResidueSet, Symbol, TricirculantSymbol,
};
pub use isoreg::{EdgeLocalParams, IsoProfile, IsoType, NonEdgeLocalParams};
pub use paramtheory::{Certificate, LocalParamSolution, Verdict};
pub use srg::{srg_params, QuadraticSurd, SrgParams};
