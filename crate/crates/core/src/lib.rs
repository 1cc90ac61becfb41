//! Exact computation with birational maps of the plane.
//!
//! The crate composes, inverts and iterates plane Cremona transformations
//! over the Gaussian rationals `ℚ(i)`, classifies degree growth, and checks
//! candidate embeddings of the Heisenberg group exactly.
//!
//! The algebra is generic over [`algebra::Scalar`]; the aliases at the
//! crate root fix the field to [`GaussRational`], which is what the text
//! syntax in [`io`] produces.
//!
//! ```
//! use cremona::io::{parse_map, render_map};
//! use cremona::birmap::commutator;
//!
//! let f = parse_map("(x, x*y)").unwrap();
//! let g = parse_map("(2*x, x*y)").unwrap();
//! let h = commutator(&f, &g).unwrap();
//! assert_eq!(render_map(&h), "(x, 2*y)");
//! ```

pub mod algebra;
pub mod birmap;
pub mod dynamics;
pub mod heisenberg;
pub mod io;

pub use algebra::GaussRational;

pub type UniPoly = algebra::UniPoly<GaussRational>;
pub type RatFunc = algebra::RatFunc<GaussRational>;
pub type Mobius = algebra::Mobius<GaussRational>;
pub type BiPoly = algebra::BiPoly<GaussRational>;
pub type TriHomPoly = algebra::TriHomPoly<GaussRational>;
pub type BiRatFunc = birmap::BiRatFunc<GaussRational>;
pub type ProjMap = birmap::ProjMap<GaussRational>;
pub type JonqMap = birmap::JonqMap<GaussRational>;
pub type BirMap = birmap::BirMap<GaussRational>;
pub type Bindings = birmap::Bindings<GaussRational>;
pub type FamilySpec = heisenberg::FamilySpec<GaussRational>;
pub type EmbeddingReport = heisenberg::EmbeddingReport<GaussRational>;
pub type ClaimSolution = heisenberg::ClaimSolution<GaussRational>;
