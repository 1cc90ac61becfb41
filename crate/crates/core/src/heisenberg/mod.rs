//! Candidate Heisenberg-group embeddings into the plane Cremona group.
//!
//! The Heisenberg group is `⟨f, g | [f,g] = h, [f,h] = [g,h] = 1⟩`.  Pairs
//! are built from parametrized families of de Jonquières and elementary
//! maps and then verified exactly; a family shape alone is never taken as
//! evidence of an embedding.

mod claim;
mod family;
mod relations;
mod verify;

pub use claim::{claim_solve, satisfies_claim, ClaimSolution};
pub use family::{build_family, check_family_constraints, commutator_constant, Constraint, FamilySpec};
pub use relations::{centralizer_check, relation_params, relation_system_check, CentralizerReport, RelationParams};
pub use verify::{
    decide_infinite_order, distortion_identity, verify_embedding, verify_family, EmbeddingReport, OrderDecision,
    OrderMethod, VerifyOptions, DEFAULT_RELATION_BOUND,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::birmap::MapError;
use crate::dynamics::DynamicsError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeisenbergError {
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("only the torus-type families have a commutator constant")]
    NotTorusFamily,
    #[error("the ratio is not a constant")]
    RatioNotConstant,
    #[error("µ must be affine")]
    NotAffine,
    #[error("unexpected shape: {0}")]
    Shape(&'static str),
    #[error("α must have multiplicative order 1, 2 or 4")]
    UnsupportedOrder,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}
