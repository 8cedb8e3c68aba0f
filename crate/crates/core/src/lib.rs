//! Singular braid monoids on closed orientable surfaces: the generators
//! σ_i, a_r and τ_i, the defining relations R1–R12, strand-trace invariants
//! and a bounded prover for word equivalence.

pub mod cli;
pub mod error;
pub mod export;
pub mod invariants;
pub mod presentation;
pub mod rewrite;
pub mod syntax;
pub mod word;

pub use error::{Error, Result};
pub use invariants::{distinguish, evaluate, profiles_equal, InvariantProfile, ProfileComponent, TraceState};
pub use presentation::{
    a2, a_wall, all_relations, build_braid_relations, build_singular_relations, tau_conjugate, tietze_simplify,
    Family, Presentation, Relation,
};
pub use rewrite::{cancel_common_prefix, Direction, ProofTrace, RewriteStep, RewriteSystem, SearchBudget, Verdict};
pub use word::{Generator, Letter, Sign, SurfaceParams, Word};
