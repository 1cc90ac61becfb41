//! The embedding families and their parameter constraints.

use crate::algebra::{is_constant_ratio, Mobius, RatFunc, Scalar, UniPoly};
use crate::birmap::{BirMap, JonqMap};

use super::HeisenbergError;

/// Parameters of one candidate pair `(f, g)`.
///
/// Construction does not check that the pair satisfies the Heisenberg
/// relations; the families describe the shapes embeddings must have, and
/// [`verify_embedding`](super::verify_embedding) decides the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec<F> {
    /// `(x + αy, y + β)`, `(x + γy, y + δ)`.
    Pgl3 { alpha: F, beta: F, gamma: F, delta: F },
    /// `(ax + Q(y), y + c)`, `(αx + P(y), y + γ)`.
    ElemA {
        a: F,
        alpha: F,
        c: F,
        gamma: F,
        p: UniPoly<F>,
        q: UniPoly<F>,
    },
    /// `(ax + Q(y), by + γ(b−1)/(β−1))`, `(αx + P(y), βy + γ)`.
    ElemB {
        a: F,
        alpha: F,
        b: F,
        beta: F,
        gamma: F,
        p: UniPoly<F>,
        q: UniPoly<F>,
    },
    /// `(x, δx^s y)`, `(γx, y·a(x))`.
    TorusPm1 { delta: F, gamma: F, s: i32, a: RatFunc<F> },
    /// `(x, δx^{2s} y)`, `(γx, y·a(x))`.
    TorusPm2 { delta: F, gamma: F, s: i32, a: RatFunc<F> },
    /// `(−x, δx^s y)`, `(γx, y·b(x))`.
    Order2 { delta: F, gamma: F, s: i32, b: RatFunc<F> },
    /// `(λx, y·c(x))`, `(δx, y·d(x))`.
    TorusGen {
        lambda: F,
        delta: F,
        c: RatFunc<F>,
        d: RatFunc<F>,
    },
}

/// One evaluated constraint; `witness` carries the relevant constant
/// (a determinant, a ratio κ) when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint<F> {
    pub name: String,
    pub satisfied: bool,
    pub witness: Option<F>,
}

impl<F> Constraint<F> {
    fn new(name: &str, satisfied: bool, witness: Option<F>) -> Self {
        Constraint {
            name: name.to_string(),
            satisfied,
            witness,
        }
    }
}

/// The torus-type pair `(λx, y·c(x))`, `(δx, y·d(x))` that every diagonal
/// family specializes.
struct TorusPair<F> {
    lambda: F,
    delta: F,
    c: RatFunc<F>,
    d: RatFunc<F>,
}

fn nonzero<F: Scalar>(v: &F, name: &str) -> Result<(), HeisenbergError> {
    if v.is_zero() {
        return Err(HeisenbergError::Domain(format!("{name} must be nonzero")));
    }
    Ok(())
}

fn nonzero_fn<F: Scalar>(v: &RatFunc<F>, name: &str) -> Result<(), HeisenbergError> {
    if v.is_zero() {
        return Err(HeisenbergError::Domain(format!("{name} must be a nonzero rational function")));
    }
    Ok(())
}

fn sign(s: i32) -> Result<i64, HeisenbergError> {
    match s {
        1 | -1 => Ok(s as i64),
        _ => Err(HeisenbergError::Domain(format!("s must be +1 or -1, got {s}"))),
    }
}

impl<F: Scalar> FamilySpec<F> {
    /// Short name used in the text syntax.
    pub fn variant_name(&self) -> &'static str {
        match self {
            FamilySpec::Pgl3 { .. } => "pgl3",
            FamilySpec::ElemA { .. } => "elema",
            FamilySpec::ElemB { .. } => "elemb",
            FamilySpec::TorusPm1 { .. } => "torus1",
            FamilySpec::TorusPm2 { .. } => "torus2",
            FamilySpec::Order2 { .. } => "order2",
            FamilySpec::TorusGen { .. } => "torusgen",
        }
    }

    /// Check the parameter domains.
    pub fn validate(&self) -> Result<(), HeisenbergError> {
        match self {
            FamilySpec::Pgl3 { .. } => Ok(()),
            FamilySpec::ElemA { a, alpha, .. } => {
                nonzero(a, "a")?;
                nonzero(alpha, "alpha")
            }
            FamilySpec::ElemB { a, alpha, b, beta, .. } => {
                nonzero(a, "a")?;
                nonzero(alpha, "alpha")?;
                nonzero(b, "b")?;
                if beta.is_zero() || beta.is_one() {
                    return Err(HeisenbergError::Domain("beta must not be 0 or 1".into()));
                }
                Ok(())
            }
            FamilySpec::TorusPm1 { delta, gamma, s, a } | FamilySpec::TorusPm2 { delta, gamma, s, a } => {
                nonzero(delta, "delta")?;
                nonzero(gamma, "gamma")?;
                sign(*s)?;
                nonzero_fn(a, "a")
            }
            FamilySpec::Order2 { delta, gamma, s, b } => {
                nonzero(delta, "delta")?;
                nonzero(gamma, "gamma")?;
                sign(*s)?;
                nonzero_fn(b, "b")
            }
            FamilySpec::TorusGen { lambda, delta, c, d } => {
                if lambda.is_zero() || lambda.is_one() || (lambda.clone() + F::one()).is_zero() {
                    return Err(HeisenbergError::Domain("lambda must not be 0, 1 or -1".into()));
                }
                nonzero(delta, "delta")?;
                nonzero_fn(c, "c")?;
                nonzero_fn(d, "d")
            }
        }
    }

    /// `c = γ(b−1)/(β−1)` for the second elementary family.
    fn elemb_shift(b: &F, beta: &F, gamma: &F) -> F {
        let num = gamma.mul_ref(&(b.clone() - F::one()));
        let den = beta.clone() - F::one();
        num.mul_ref(&den.inv().expect("beta != 1"))
    }

    fn torus_pair(&self) -> Option<TorusPair<F>> {
        let monomial = |delta: &F, k: i64| RatFunc::monomial(delta.clone(), k);
        Some(match self {
            FamilySpec::TorusPm1 { delta, gamma, s, a } => TorusPair {
                lambda: F::one(),
                delta: gamma.clone(),
                c: monomial(delta, *s as i64),
                d: a.clone(),
            },
            FamilySpec::TorusPm2 { delta, gamma, s, a } => TorusPair {
                lambda: F::one(),
                delta: gamma.clone(),
                c: monomial(delta, 2 * *s as i64),
                d: a.clone(),
            },
            FamilySpec::Order2 { delta, gamma, s, b } => TorusPair {
                lambda: -F::one(),
                delta: gamma.clone(),
                c: monomial(delta, *s as i64),
                d: b.clone(),
            },
            FamilySpec::TorusGen { lambda, delta, c, d } => TorusPair {
                lambda: lambda.clone(),
                delta: delta.clone(),
                c: c.clone(),
                d: d.clone(),
            },
            _ => return None,
        })
    }
}

/// Build the pair `(f, g)` as de Jonquières maps.
pub fn build_family<F: Scalar>(spec: &FamilySpec<F>) -> Result<(BirMap<F>, BirMap<F>), HeisenbergError> {
    spec.validate()?;
    let one = F::one;
    let pair = match spec {
        FamilySpec::Pgl3 { alpha, beta, gamma, delta } => (
            JonqMap::elementary(one(), UniPoly::monomial(alpha.clone(), 1), one(), beta.clone())?,
            JonqMap::elementary(one(), UniPoly::monomial(gamma.clone(), 1), one(), delta.clone())?,
        ),
        FamilySpec::ElemA { a, alpha, c, gamma, p, q } => (
            JonqMap::elementary(a.clone(), q.clone(), one(), c.clone())?,
            JonqMap::elementary(alpha.clone(), p.clone(), one(), gamma.clone())?,
        ),
        FamilySpec::ElemB { a, alpha, b, beta, gamma, p, q } => (
            JonqMap::elementary(a.clone(), q.clone(), b.clone(), FamilySpec::elemb_shift(b, beta, gamma))?,
            JonqMap::elementary(alpha.clone(), p.clone(), beta.clone(), gamma.clone())?,
        ),
        _ => {
            let t = spec.torus_pair().expect("torus-type family");
            (
                JonqMap::twisted_scaling(Mobius::scaling(t.lambda)?, &t.c)?,
                JonqMap::twisted_scaling(Mobius::scaling(t.delta)?, &t.d)?,
            )
        }
    };
    Ok((BirMap::Jonq(pair.0), BirMap::Jonq(pair.1)))
}

/// The constant `κ` with `[f, g] = (x, κy)` for the torus-type families,
/// `κ = c(δu)·d(u) / (c(u)·d(λu))`.
pub fn commutator_constant<F: Scalar>(spec: &FamilySpec<F>) -> Result<F, HeisenbergError> {
    spec.validate()?;
    let t = spec.torus_pair().ok_or(HeisenbergError::NotTorusFamily)?;
    let top = &t.c.scale_var(&t.delta)? * &t.d;
    let bottom = &t.c * &t.d.scale_var(&t.lambda)?;
    is_constant_ratio(&top, &bottom)?.ok_or(HeisenbergError::RatioNotConstant)
}

/// Evaluate the family's defining constraints exactly.
pub fn check_family_constraints<F: Scalar>(spec: &FamilySpec<F>) -> Vec<Constraint<F>> {
    let mut out = Vec::new();
    match spec {
        FamilySpec::Pgl3 { alpha, beta, gamma, delta } => {
            let det = alpha.mul_ref(delta) - beta.mul_ref(gamma);
            out.push(Constraint::new("alpha*delta - beta*gamma = 1", det.is_one(), Some(det)));
        }
        FamilySpec::ElemA { a, alpha, .. } => {
            out.push(Constraint::new("a != 0", !a.is_zero(), None));
            out.push(Constraint::new("alpha != 0", !alpha.is_zero(), None));
        }
        FamilySpec::ElemB { a, alpha, b, beta, gamma, .. } => {
            out.push(Constraint::new("a != 0", !a.is_zero(), None));
            out.push(Constraint::new("alpha != 0", !alpha.is_zero(), None));
            out.push(Constraint::new("b != 0", !b.is_zero(), None));
            let ok = !beta.is_zero() && !beta.is_one();
            out.push(Constraint::new("beta not in {0, 1}", ok, None));
            let shift = ok.then(|| FamilySpec::elemb_shift(b, beta, gamma));
            out.push(Constraint::new("c = gamma*(b - 1)/(beta - 1)", ok, shift));
        }
        FamilySpec::TorusPm1 { delta, gamma, s, a } | FamilySpec::TorusPm2 { delta, gamma, s, a } => {
            out.push(Constraint::new("delta != 0", !delta.is_zero(), None));
            out.push(Constraint::new("gamma != 0", !gamma.is_zero(), None));
            out.push(Constraint::new("s = +1 or -1", sign(*s).is_ok(), None));
            out.push(Constraint::new("a != 0", !a.is_zero(), None));
        }
        FamilySpec::Order2 { delta, gamma, s, b } => {
            out.push(Constraint::new("delta != 0", !delta.is_zero(), None));
            out.push(Constraint::new("gamma != 0", !gamma.is_zero(), None));
            out.push(Constraint::new("s = +1 or -1", sign(*s).is_ok(), None));
            let kappa = if b.is_zero() {
                None
            } else {
                let flipped = b.scale_var(&-F::one()).expect("scaling by -1");
                is_constant_ratio(b, &flipped).ok().flatten()
            };
            out.push(Constraint::new("b(x)/b(-x) constant", kappa.is_some(), kappa));
        }
        FamilySpec::TorusGen { lambda, delta, c, d } => {
            let ok = !lambda.is_zero() && !lambda.is_one() && !(lambda.clone() + F::one()).is_zero();
            out.push(Constraint::new("lambda not in {0, 1, -1}", ok, None));
            out.push(Constraint::new("delta != 0", !delta.is_zero(), None));
            let kappa = if c.is_zero() || d.is_zero() || lambda.is_zero() || delta.is_zero() {
                None
            } else {
                let top = &c.scale_var(delta).expect("nonzero") * d;
                let bottom = c * &d.scale_var(lambda).expect("nonzero");
                is_constant_ratio(&top, &bottom).ok().flatten()
            };
            out.push(Constraint::new(
                "c(delta*x)*d(x)/(c(x)*d(lambda*x)) constant",
                kappa.is_some(),
                kappa,
            ));
        }
    }
    out
}
