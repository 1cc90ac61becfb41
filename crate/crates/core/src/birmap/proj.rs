//! Birational maps as reduced triples of homogeneous forms.

use crate::algebra::{gcd_forms_many, BiPoly, Scalar, SparsePoly, TriHomPoly};

use super::affine::BiRatFunc;
use super::{Caps, MapError};

/// `(P₀ : P₁ : P₂)` with no common factor, scaled so the leading
/// coefficient of the first nonzero component is one.
///
/// Because the form is canonical, projective equality of two maps is
/// structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap<F> {
    comps: [TriHomPoly<F>; 3],
}

impl<F: Scalar> ProjMap<F> {
    /// Clear the common factor of a triple and normalize it.
    pub fn new(comps: [TriHomPoly<F>; 3]) -> Result<Self, MapError> {
        let Some(degree) = comps.iter().find(|c| !c.is_zero()).map(|c| c.degree()) else {
            return Err(MapError::NotDominant);
        };
        if comps.iter().any(|c| !c.is_zero() && c.degree() != degree) {
            return Err(MapError::UnequalDegrees);
        }
        let g = gcd_forms_many(&comps)?;
        let reduced: Vec<TriHomPoly<F>> = if g.degree() == 0 {
            comps.to_vec()
        } else {
            comps
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        Ok(TriHomPoly::zero(degree - g.degree()))
                    } else if g.is_monomial() {
                        Ok(c.div_monomial(&g.lead().expect("nonzero").0))
                    } else {
                        c.exact_div(&g)
                    }
                })
                .collect::<Result<_, _>>()?
        };
        Self::normalized(reduced, degree - g.degree())
    }

    /// Canonical scaling of a triple already known to be coprime.
    pub(crate) fn from_coprime(comps: [TriHomPoly<F>; 3]) -> Result<Self, MapError> {
        let Some(degree) = comps.iter().find(|c| !c.is_zero()).map(|c| c.degree()) else {
            return Err(MapError::NotDominant);
        };
        Self::normalized(comps.to_vec(), degree)
    }

    fn normalized(reduced: Vec<TriHomPoly<F>>, out_degree: u32) -> Result<Self, MapError> {
        if out_degree == 0 {
            return Err(MapError::ConstantMap);
        }
        let lead = reduced
            .iter()
            .find(|c| !c.is_zero())
            .and_then(|c| c.lead())
            .expect("nonzero component")
            .1
            .inv()
            .expect("nonzero");
        let comps = [0, 1, 2].map(|k| {
            if reduced[k].is_zero() {
                TriHomPoly::zero(out_degree)
            } else {
                reduced[k].scale(&lead)
            }
        });
        Ok(ProjMap { comps })
    }

    pub fn identity() -> Self {
        ProjMap {
            comps: [TriHomPoly::var(0), TriHomPoly::var(1), TriHomPoly::var(2)],
        }
    }

    /// The projective linear map with the given 3×3 matrix (rows are the
    /// coefficients of `x, y, z` in each component).
    pub fn linear(matrix: [[F; 3]; 3]) -> Result<Self, MapError> {
        if det3(&matrix).is_zero() {
            return Err(MapError::NonInvertible);
        }
        let comps = matrix.map(|row| {
            TriHomPoly::new(
                1,
                SparsePoly::from_terms(
                    row.into_iter()
                        .enumerate()
                        .map(|(k, c)| {
                            let mut e = [0u32; 3];
                            e[k] = 1;
                            (e, c)
                        }),
                ),
            )
            .expect("linear forms")
        });
        Self::new(comps)
    }

    pub fn components(&self) -> &[TriHomPoly<F>; 3] {
        &self.comps
    }

    pub fn degree(&self) -> u32 {
        self.comps[0].degree()
    }

    /// Total number of terms across the three components.
    pub fn term_count(&self) -> usize {
        self.comps.iter().map(TriHomPoly::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Projective equality.  Normal forms are canonical, so this compares
    /// structurally; [`cross_products_vanish`] is the equivalent definition
    /// for raw triples.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self == other
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, MapError> {
        let raw = self.comps.clone().map(|c| c.substitute(&inner.comps));
        Self::new(raw)
    }

    /// `self ∘ inner`, refusing work whose a-priori degree bound `deg f ·
    /// deg g` or whose result size exceeds the caps.
    pub fn compose_capped(&self, inner: &Self, caps: &Caps) -> Result<Self, MapError> {
        let bound = self.degree() as u64 * inner.degree() as u64;
        if bound > caps.max_degree as u64 {
            return Err(MapError::DegreeCap {
                bound,
                cap: caps.max_degree,
            });
        }
        let out = self.compose(inner)?;
        if out.term_count() > caps.max_terms {
            return Err(MapError::TermCap {
                terms: out.term_count(),
                cap: caps.max_terms,
            });
        }
        Ok(out)
    }

    /// Coefficient matrix of a degree-one map.
    pub fn linear_matrix(&self) -> Option<[[F; 3]; 3]> {
        if self.degree() != 1 {
            return None;
        }
        Some(self.comps.clone().map(|c| {
            [0, 1, 2].map(|k| {
                let mut e = [0u32; 3];
                e[k] = 1;
                c.coeff(&e)
            })
        }))
    }

    /// Inverse of a degree-one map through the adjugate matrix.  General
    /// inversion is not provided.
    pub fn inverse(&self) -> Result<Self, MapError> {
        let m = self.linear_matrix().ok_or(MapError::InverseUnavailable)?;
        let cof = |r: usize, c: usize| -> F {
            let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            let d = m[rows[0]][cols[0]].mul_ref(&m[rows[1]][cols[1]])
                - m[rows[0]][cols[1]].mul_ref(&m[rows[1]][cols[0]]);
            if (r + c).is_multiple_of(2) {
                d
            } else {
                -d
            }
        };
        // adj(M)[i][j] = cofactor(j, i)
        let adj = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cof(j, i)));
        Self::linear(adj)
    }

    /// The map on the chart `z = 1`: `(P₀/P₂, P₁/P₂)`.
    pub fn to_affine(&self) -> Result<(BiRatFunc<F>, BiRatFunc<F>), MapError> {
        let [p0, p1, p2] = &self.comps;
        let den = p2.dehomogenize();
        if den.is_zero() {
            return Err(MapError::ImageAtInfinity);
        }
        Ok((
            BiRatFunc::new(p0.dehomogenize(), den.clone())?,
            BiRatFunc::new(p1.dehomogenize(), den)?,
        ))
    }
}

/// Whether two raw triples are proportional: `pᵢ·qⱼ − pⱼ·qᵢ = 0` for all
/// `i < j`.
pub fn cross_products_vanish<F: Scalar>(p: &[TriHomPoly<F>; 3], q: &[TriHomPoly<F>; 3]) -> bool {
    [(0, 1), (0, 2), (1, 2)]
        .iter()
        .all(|&(i, j)| (&p[i] * &q[j]) == (&p[j] * &q[i]))
}

fn det3<F: Scalar>(m: &[[F; 3]; 3]) -> F {
    let t = |a: usize, b: usize, c: usize| m[0][a].mul_ref(&m[1][b]).mul_ref(&m[2][c]);
    t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2)
}

/// Projective triple of an affine rational map `(fx, fy)`.
///
/// Rejects constant maps and maps whose Jacobian determinant vanishes
/// identically; the latter is a necessary condition for birationality, not
/// a certificate of it.
pub fn proj_from_affine<F: Scalar>(fx: &BiRatFunc<F>, fy: &BiRatFunc<F>) -> Result<ProjMap<F>, MapError> {
    if fx.is_constant() && fy.is_constant() {
        return Err(MapError::ConstantMap);
    }
    let jac = &(&fx.derivative(0) * &fy.derivative(1)) - &(&fx.derivative(1) * &fy.derivative(0));
    if jac.is_zero() {
        return Err(MapError::VanishingJacobian);
    }
    let (a, b) = (fx.num(), fx.den());
    let (c, d) = (fy.num(), fy.den());
    // common denominator lcm(b, d) = b·d / gcd(b, d)
    let g = crate::algebra::gcd_bivariate(b, d)?;
    let (b1, d1) = if g.is_constant() {
        (b.clone(), d.clone())
    } else {
        (b.exact_div(&g)?, d.exact_div(&g)?)
    };
    let affine: [BiPoly<F>; 3] = [a * &d1, c * &b1, &b1 * d];
    let degree = affine.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
    let comps = [0, 1, 2].map(|k| TriHomPoly::homogenize(&affine[k], degree).expect("degree bound"));
    ProjMap::new(comps)
}
