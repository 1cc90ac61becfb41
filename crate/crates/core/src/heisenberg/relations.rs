//! The functional equations satisfied by torus-type generators, and
//! centralizers of diagonal and additive maps.

use serde::{Deserialize, Serialize};

use crate::algebra::{Mobius, RatFunc, Scalar};
use crate::birmap::{Axis, BirMap, JonqMap};

use super::HeisenbergError;

/// `f = (λx, y·a(x))`, `g = (µ(x), y·b(x))`, `h = (γx, βy)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationParams<F> {
    pub lambda: F,
    pub mu: Mobius<F>,
    pub gamma: F,
    pub beta: F,
    pub a: RatFunc<F>,
    pub b: RatFunc<F>,
}

/// Read the parameters off three maps of the required shapes.
pub fn relation_params<F: Scalar>(
    f: &JonqMap<F>,
    g: &JonqMap<F>,
    h: &JonqMap<F>,
) -> Result<RelationParams<F>, HeisenbergError> {
    let base_x = |m: &JonqMap<F>| m.base() == Axis::X || m.reorient(Axis::X).is_some();
    let oriented = |m: &JonqMap<F>| if m.base() == Axis::X { Some(m.clone()) } else { m.reorient(Axis::X) };
    if ![f, g, h].iter().all(|m| base_x(m)) {
        return Err(HeisenbergError::Shape("maps must fix the fibration x = const"));
    }
    let (f, g, h) = (oriented(f).unwrap(), oriented(g).unwrap(), oriented(h).unwrap());
    let lambda = f.eta().as_scaling().ok_or(HeisenbergError::Shape("f must be (λx, y·a(x))"))?;
    let a = f.y_multiplier().ok_or(HeisenbergError::Shape("f must be (λx, y·a(x))"))?;
    let b = g.y_multiplier().ok_or(HeisenbergError::Shape("g must be (µ(x), y·b(x))"))?;
    let (gamma, beta) = h.as_diagonal().ok_or(HeisenbergError::Shape("h must be (γx, βy)"))?;
    Ok(RelationParams {
        lambda,
        mu: g.eta().clone(),
        gamma,
        beta,
        a,
        b,
    })
}

/// The five identities
/// `a(x) = a(γx)`, `b(x) = b(γx)`, `µ(γx) = γµ(x)`, `λµ(x) = γµ(λx)` and
/// `b(x)·a(µ(x)) = β·a(x)·b(λx)`, each decided exactly.
pub fn relation_system_check<F: Scalar>(p: &RelationParams<F>) -> Result<[bool; 5], HeisenbergError> {
    let mu = p.mu.as_ratfunc();
    let mu_at = |c: &F| mu.scale_var(c);
    let rel1 = p.a == p.a.scale_var(&p.gamma)?;
    let rel2 = p.b == p.b.scale_var(&p.gamma)?;
    let rel3 = mu_at(&p.gamma)? == mu.scale(&p.gamma);
    let rel4 = mu.scale(&p.lambda) == mu_at(&p.lambda)?.scale(&p.gamma);
    let lhs = &p.b * &p.mu.apply(&p.a);
    let rhs = (&p.a * &p.b.scale_var(&p.lambda)?).scale(&p.beta);
    Ok([rel1, rel2, rel3, rel4, lhs == rhs])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerReport {
    /// `φ ∘ h = h ∘ φ`.
    pub commutes: bool,
    /// Whether `φ` has the described centralizer shape: `(η(x), y·a(xᵏ))`
    /// for diagonal `h`, `(η(x), y + a(x))` with `a(αx) = a(x)` for
    /// additive `h`, where in both cases `η(αx) = αη(x)`.
    pub structural: bool,
    /// The order `k` of `α`.
    pub order: u32,
}

/// Decide whether `phi` commutes with `h = (αx, βy)` or `h = (αx, y + 1)`,
/// and whether it matches the explicit centralizer description.
///
/// `α` must have order 1, 2 or 4 so that `F(xᵏ)` is tested by exponents.
pub fn centralizer_check<F: Scalar>(phi: &JonqMap<F>, h: &JonqMap<F>) -> Result<CentralizerReport, HeisenbergError> {
    let h_x = if h.base() == Axis::X { Some(h.clone()) } else { h.reorient(Axis::X) };
    let h_x = h_x.ok_or(HeisenbergError::Shape("h must be (αx, βy) or (αx, y + 1)"))?;
    let alpha = h_x.eta().as_scaling().ok_or(HeisenbergError::Shape("h must be (αx, βy) or (αx, y + 1)"))?;
    let additive = match (h_x.y_shift(), h_x.as_diagonal()) {
        (Some(s), _) if s.is_one() => true,
        (_, Some(_)) => false,
        _ => return Err(HeisenbergError::Shape("h must be (αx, βy) or (αx, y + 1)")),
    };
    let order = alpha.root_of_unity_order().filter(|k| [1, 2, 4].contains(k));
    let order = order.ok_or(HeisenbergError::UnsupportedOrder)?;

    let (p, q) = (BirMap::Jonq(phi.clone()), BirMap::Jonq(h.clone()));
    let commutes = p.compose(&q)?.same_map(&q.compose(&p)?);

    let phi_x = if phi.base() == Axis::X { Some(phi.clone()) } else { phi.reorient(Axis::X) };
    let structural = phi_x.is_some_and(|phi| {
        let s = Mobius::scaling(alpha.clone()).expect("alpha != 0");
        let equivariant = phi.eta().compose(&s) == s.compose(phi.eta());
        let fiber = if additive {
            phi.y_shift().is_some_and(|a| a.scale_var(&alpha).is_ok_and(|r| r == a))
        } else {
            phi.y_multiplier().is_some_and(|a| a.is_function_of_power(order as usize))
        };
        equivariant && fiber
    });
    Ok(CentralizerReport {
        commutes,
        structural,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;

    type G = GaussRational;
    type R = RatFunc<G>;

    fn g(n: i64) -> G {
        G::from(n)
    }

    fn torus(alpha: G, a: R) -> JonqMap<G> {
        JonqMap::twisted_scaling(Mobius::scaling(alpha).unwrap(), &a).unwrap()
    }

    #[test]
    fn five_relations() {
        let mut p = RelationParams {
            lambda: g(2),
            mu: Mobius::scaling(g(3)).unwrap(),
            gamma: g(1),
            beta: G::ratio(3, 2),
            a: R::x(),
            b: R::x(),
        };
        assert_eq!(relation_system_check(&p).unwrap(), [true; 5]);
        p.beta = g(1);
        assert_eq!(relation_system_check(&p).unwrap(), [true, true, true, true, false]);
    }

    #[test]
    fn params_from_maps() {
        let f = torus(g(2), R::x());
        let gg = torus(g(3), R::x());
        let h = JonqMap::diagonal(g(1), G::ratio(3, 2)).unwrap();
        let p = relation_params(&f, &gg, &h).unwrap();
        assert_eq!(p.beta, G::ratio(3, 2));
        assert_eq!(relation_system_check(&p).unwrap(), [true; 5]);
        let elem = JonqMap::elementary(g(1), crate::algebra::UniPoly::x(), g(1), g(1)).unwrap();
        assert!(matches!(relation_params(&elem, &gg, &h), Err(HeisenbergError::Shape(_))));
    }

    #[test]
    fn centralizers() {
        let h = JonqMap::diagonal(g(-1), g(3)).unwrap();
        let phi = torus(g(2), R::monomial(g(1), 2));
        let r = centralizer_check(&phi, &h).unwrap();
        assert!(r.commutes && r.structural);
        assert_eq!(r.order, 2);

        let shift = JonqMap::twisted_scaling(Mobius::translation(g(1)), &R::one()).unwrap();
        let r = centralizer_check(&shift, &h).unwrap();
        assert!(!r.commutes && !r.structural);

        let r = centralizer_check(&h, &h).unwrap();
        assert!(r.commutes && r.structural);

        let odd = torus(g(2), R::x());
        let r = centralizer_check(&odd, &h).unwrap();
        assert!(!r.commutes && !r.structural);

        let add = JonqMap::twisted_shift(Mobius::scaling(G::i()).unwrap(), &R::one()).unwrap();
        let phi = JonqMap::twisted_shift(Mobius::scaling(g(5)).unwrap(), &R::monomial(g(1), 4)).unwrap();
        let r = centralizer_check(&phi, &add).unwrap();
        assert!(r.commutes && r.structural);
        assert_eq!(r.order, 4);

        let bad = JonqMap::diagonal(g(2), g(3)).unwrap();
        assert!(matches!(centralizer_check(&phi, &bad), Err(HeisenbergError::UnsupportedOrder)));
    }
}
