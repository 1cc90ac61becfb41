//! Exact arithmetic over the Gaussian rationals: scalars, univariate and
//! multivariate polynomials, rational functions and Möbius maps.

mod gauss;
pub mod gcd;
pub mod linalg;
mod mobius;
pub mod modp;
mod multipoly;
mod ratfunc;
mod rational;
mod scalar;
mod trihom;
mod unipoly;

pub use gauss::GaussRational;
pub use gcd::{gcd_bivariate, gcd_forms, gcd_forms_many};
pub use mobius::Mobius;
pub use multipoly::{BiPoly, Exponent, SparsePoly};
pub use ratfunc::{is_constant_ratio, RatFunc};
pub use scalar::{multiplicative_relations, Scalar};
pub use trihom::TriHomPoly;
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0}: zero input")]
    ZeroInput(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact")]
    InexactDivision,
    #[error("degenerate matrix")]
    DegenerateMatrix,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("exponent out of range")]
    Overflow,
}
