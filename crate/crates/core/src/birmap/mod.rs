//! Birational maps of the plane: reduced projective triples, de Jonquières
//! normal forms, words and commutators.

mod affine;
mod jonq;
mod proj;
mod word;

pub use affine::BiRatFunc;
pub use jonq::{Axis, JonqMap};
pub use proj::{cross_products_vanish, proj_from_affine, ProjMap};
pub use word::{commutator, word_eval, Binding, Bindings, MapWord};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("constant map")]
    ConstantMap,
    #[error("Jacobian vanishes identically; the map is not birational")]
    VanishingJacobian,
    #[error("composition is not dominant")]
    NotDominant,
    #[error("components have unequal degrees")]
    UnequalDegrees,
    #[error("map is not invertible")]
    NonInvertible,
    #[error("inverse unavailable: only de Jonquières and linear maps are inverted")]
    InverseUnavailable,
    #[error("maps preserve different fibrations and cannot be composed in normal form")]
    BaseMismatch,
    #[error("image of the affine chart lies at infinity")]
    ImageAtInfinity,
    #[error("unbound symbol `{0}`")]
    UnboundSymbol(String),
    #[error("no inverse bound for `{0}`")]
    MissingInverse(String),
    #[error("degree bound {bound} exceeds cap {cap}")]
    DegreeCap { bound: u64, cap: u32 },
    #[error("{terms} terms exceed cap {cap}")]
    TermCap { terms: usize, cap: usize },
}

impl MapError {
    pub fn is_cap(&self) -> bool {
        matches!(self, MapError::DegreeCap { .. } | MapError::TermCap { .. })
    }
}

/// Size limits for projective composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_degree: u32,
    pub max_terms: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_degree: 512,
            max_terms: 200_000,
        }
    }
}

/// A birational map in either representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BirMap<F> {
    Jonq(JonqMap<F>),
    Proj(ProjMap<F>),
}

impl<F: Scalar> BirMap<F> {
    pub fn to_proj(&self) -> ProjMap<F> {
        match self {
            BirMap::Jonq(j) => j.to_proj(),
            BirMap::Proj(p) => p.clone(),
        }
    }

    pub fn as_jonq(&self) -> Option<&JonqMap<F>> {
        match self {
            BirMap::Jonq(j) => Some(j),
            BirMap::Proj(_) => None,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            BirMap::Jonq(j) => j.degree(),
            BirMap::Proj(p) => p.degree(),
        }
    }

    pub fn identity_like(&self) -> Self {
        match self {
            BirMap::Jonq(j) => BirMap::Jonq(JonqMap::identity(j.base())),
            BirMap::Proj(_) => BirMap::Proj(ProjMap::identity()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            BirMap::Jonq(j) => j.is_identity(),
            BirMap::Proj(p) => p.is_identity(),
        }
    }

    /// `self ∘ inner`.  Stays in normal form when both maps are de
    /// Jonquières maps over a common base, otherwise goes projective.
    pub fn compose(&self, inner: &Self) -> Result<Self, MapError> {
        if let (BirMap::Jonq(a), BirMap::Jonq(b)) = (self, inner) {
            match a.compose(b) {
                Ok(c) => return Ok(BirMap::Jonq(c)),
                Err(MapError::BaseMismatch) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(BirMap::Proj(self.to_proj().compose(&inner.to_proj())?))
    }

    pub fn inverse(&self) -> Result<Self, MapError> {
        match self {
            BirMap::Jonq(j) => Ok(BirMap::Jonq(j.inverse())),
            BirMap::Proj(p) => Ok(BirMap::Proj(p.inverse()?)),
        }
    }

    /// Equality as maps, independent of representation.
    pub fn same_map(&self, other: &Self) -> bool {
        if let (BirMap::Jonq(a), BirMap::Jonq(b)) = (self, other) {
            if a == b {
                return true;
            }
        }
        self.to_proj() == other.to_proj()
    }
}

impl<F: Scalar> From<JonqMap<F>> for BirMap<F> {
    fn from(j: JonqMap<F>) -> Self {
        BirMap::Jonq(j)
    }
}

impl<F: Scalar> From<ProjMap<F>> for BirMap<F> {
    fn from(p: ProjMap<F>) -> Self {
        BirMap::Proj(p)
    }
}
