//! Text syntax for maps and family specifications, canonical rendering,
//! and JSON report documents.
//!
//! Maps are written affinely as `(f₁, f₂)` in `x, y`, or projectively as
//! `[F₀ : F₁ : F₂]` in `x, y, z`.  Coefficients live in `ℚ(i)`: `3/2`,
//! `1 + 2*i`, `2i`.  Multiplication is always explicit.

mod family;
mod lexer;
mod maps;
mod parser;
mod render;
mod report;

pub use family::{parse_family, parse_family_args, render_family, FAMILY_VARIANTS};
pub use maps::{parse_maps_file, NamedMap};
pub use parser::{parse_expr, parse_map_syntax, MapExpr, MapSyntax};
pub use render::{render_affine, render_birat, render_map, render_poly, render_proj, render_ratfunc, render_unipoly};
pub use report::{
    from_json, to_json, ClaimDoc, ClaimInput, ConstraintDoc, DegreesDoc, EmbeddingDoc, EmbeddingInput, FamilyDoc,
    GrowthDoc, GrowthTriple, MapDoc, RelationsDoc, ReportDoc, SchemaError, VERSION,
};

use std::fmt;

use thiserror::Error;

use crate::algebra::{GaussRational, RatFunc, SparsePoly, TriHomPoly, UniPoly};
use crate::birmap::{proj_from_affine, BiRatFunc, BirMap, JonqMap, MapError, ProjMap};

use parser::{eval, AFFINE_VARS};

/// A syntax or evaluation error at a source position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    /// The offending token, empty for evaluation errors.
    pub found: String,
    /// Tokens that would have been accepted.
    pub expected: Vec<String>,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        if let Some(m) = &self.message {
            write!(f, "{m}")?;
            if !self.expected.is_empty() {
                write!(f, "; ")?;
            }
        }
        if !self.expected.is_empty() {
            write!(f, "expected {}", self.expected.join(" or "))?;
            if !self.found.is_empty() {
                write!(f, ", found {}", self.found)?;
            }
        } else if self.message.is_none() {
            write!(f, "unexpected {}", self.found)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Map(#[from] MapError),
    #[error("{0}")]
    Value(String),
}

/// Parse a map; affine pairs become de Jonquières maps when they have that
/// shape and reduced triples otherwise.
pub fn parse_map(text: &str) -> Result<BirMap<GaussRational>, IoError> {
    match parse_map_syntax(text)? {
        MapSyntax::Affine([a, b]) => {
            let fx: BiRatFunc<GaussRational> = eval(&a)?;
            let fy: BiRatFunc<GaussRational> = eval(&b)?;
            if let Some(j) = JonqMap::from_affine(&fx, &fy) {
                return Ok(BirMap::Jonq(j));
            }
            Ok(BirMap::Proj(proj_from_affine(&fx, &fy)?))
        }
        MapSyntax::Projective(exprs) => {
            let mut comps = Vec::with_capacity(3);
            for e in &exprs {
                let p: SparsePoly<GaussRational, 3> = eval(e)?;
                let h = TriHomPoly::from_poly(p).map_err(|_| {
                    IoError::Value("projective components must be homogeneous".to_string())
                })?;
                comps.push(h);
            }
            let comps: [TriHomPoly<GaussRational>; 3] = comps.try_into().expect("three components");
            Ok(BirMap::Proj(ProjMap::new(comps)?))
        }
    }
}

/// Parse a rational function of `x, y`.
pub fn parse_birat(text: &str) -> Result<BiRatFunc<GaussRational>, ParseError> {
    eval(&parse_expr(text, AFFINE_VARS)?)
}

/// Parse a univariate rational function in `var`.
pub fn parse_ratfunc(text: &str, var: &str) -> Result<RatFunc<GaussRational>, ParseError> {
    let r: BiRatFunc<GaussRational> = eval(&parse_expr(text, &[var])?)?;
    Ok(r.as_univariate(0).expect("single variable"))
}

/// Parse a univariate polynomial in `var`.
pub fn parse_unipoly(text: &str, var: &str) -> Result<UniPoly<GaussRational>, IoError> {
    let r = parse_ratfunc(text, var)?;
    if !r.is_polynomial() {
        return Err(IoError::Value(format!("`{text}` is not a polynomial in {var}")));
    }
    Ok(r.num().clone())
}

/// Parse a constant such as `3/2`, `-i` or `1 + 2*i`.
pub fn parse_scalar(text: &str) -> Result<GaussRational, ParseError> {
    let r: BiRatFunc<GaussRational> = eval(&parse_expr(text, &[])?)?;
    Ok(r.as_constant().expect("no variables"))
}
