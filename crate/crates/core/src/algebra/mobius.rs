//! Möbius transformations `x ↦ (a x + b)/(c x + d)` in `PGL(2)`.


use super::ratfunc::RatFunc;
use super::scalar::Scalar;
use super::unipoly::UniPoly;
use super::AlgebraError;

/// A nondegenerate 2×2 matrix `[[a, b], [c, d]]` up to scalars, scaled so its
/// first nonzero entry is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mobius<F> {
    m: [F; 4],
}

impl<F: Scalar> Mobius<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self, AlgebraError> {
        let det = a.mul_ref(&d) - b.mul_ref(&c);
        if det.is_zero() {
            return Err(AlgebraError::DegenerateMatrix);
        }
        let mut m = [a, b, c, d];
        let lead = m.iter().find(|e| !e.is_zero()).expect("det != 0").inv().expect("nonzero");
        for e in m.iter_mut() {
            *e = e.mul_ref(&lead);
        }
        Ok(Mobius { m })
    }

    pub fn identity() -> Self {
        Mobius {
            m: [F::one(), F::zero(), F::zero(), F::one()],
        }
    }

    /// `x ↦ λ x`.
    pub fn scaling(lambda: F) -> Result<Self, AlgebraError> {
        Self::new(lambda, F::zero(), F::zero(), F::one())
    }

    /// `x ↦ x + t`.
    pub fn translation(t: F) -> Self {
        Self::new(F::one(), t, F::zero(), F::one()).expect("unipotent")
    }

    /// `x ↦ a x + b`.
    pub fn affine(a: F, b: F) -> Result<Self, AlgebraError> {
        Self::new(a, b, F::zero(), F::one())
    }

    pub fn entries(&self) -> &[F; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `Some((a, b))` when this is `x ↦ a x + b`.
    pub fn as_affine(&self) -> Option<(F, F)> {
        let [a, b, c, d] = &self.m;
        if !c.is_zero() {
            return None;
        }
        let dinv = d.inv()?;
        Some((a.mul_ref(&dinv), b.mul_ref(&dinv)))
    }

    /// `Some(λ)` when this is `x ↦ λ x`.
    pub fn as_scaling(&self) -> Option<F> {
        self.as_affine()
            .and_then(|(a, b)| if b.is_zero() { Some(a) } else { None })
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        Self::new(
            a.mul_ref(e) + b.mul_ref(g),
            a.mul_ref(f) + b.mul_ref(h),
            c.mul_ref(e) + d.mul_ref(g),
            c.mul_ref(f) + d.mul_ref(h),
        )
        .expect("product of invertible matrices")
    }

    pub fn invert(&self) -> Self {
        let [a, b, c, d] = &self.m;
        Self::new(d.clone(), -b.clone(), -c.clone(), a.clone()).expect("invertible")
    }

    /// The transformation as a rational function of `x`.
    pub fn as_ratfunc(&self) -> RatFunc<F> {
        let [a, b, c, d] = &self.m;
        RatFunc::new(
            UniPoly::linear(a.clone(), b.clone()),
            UniPoly::linear(c.clone(), d.clone()),
        )
        .expect("nondegenerate")
    }

    /// Recognize a rational function of degree one as a Möbius map.
    pub fn from_ratfunc(r: &RatFunc<F>) -> Option<Self> {
        if r.num().degree().unwrap_or(0) > 1 || r.den().degree().unwrap_or(0) > 1 {
            return None;
        }
        Self::new(
            r.num().coeff(1),
            r.num().coeff(0),
            r.den().coeff(1),
            r.den().coeff(0),
        )
        .ok()
    }

    /// Substitution `r(self(x))`.
    pub fn apply(&self, r: &RatFunc<F>) -> RatFunc<F> {
        r.substitute(self)
    }

    /// Transformation of a value: `self(r(x))`.
    pub fn eval(&self, r: &RatFunc<F>) -> Result<RatFunc<F>, AlgebraError> {
        let [a, b, c, d] = &self.m;
        let top = &r.scale(a) + &RatFunc::constant(b.clone());
        let bottom = &r.scale(c) + &RatFunc::constant(d.clone());
        top.checked_div(&bottom)
    }

    /// Evaluate at a point; `None` at the pole.
    pub fn eval_at(&self, t: &F) -> Option<F> {
        let [a, b, c, d] = &self.m;
        let den = c.mul_ref(t) + d;
        den.inv().map(|di| (a.mul_ref(t) + b).mul_ref(&di))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;
    use proptest::prelude::*;

    type M = Mobius<GaussRational>;
    type R = RatFunc<GaussRational>;

    fn g(n: i64) -> GaussRational {
        GaussRational::from(n)
    }

    #[test]
    fn compose_example() {
        let two_x = M::scaling(g(2)).unwrap();
        let shift = M::translation(g(1));
        assert_eq!(two_x.compose(&shift), M::affine(g(2), g(2)).unwrap());
    }

    #[test]
    fn inversion_is_an_involution_for_gamma_over_x() {
        let m = M::new(g(0), g(5), g(1), g(0)).unwrap();
        assert_eq!(m.invert(), m);
    }

    #[test]
    fn apply_substitutes() {
        let neg = M::scaling(g(-1)).unwrap();
        let a = R::from_poly(UniPoly::from_coeffs(vec![g(0), g(1), g(1)]));
        let expected = R::from_poly(UniPoly::from_coeffs(vec![g(0), g(-1), g(1)]));
        assert_eq!(neg.apply(&a), expected);
    }

    #[test]
    fn degenerate_rejected() {
        assert!(M::new(g(1), g(2), g(2), g(4)).is_err());
    }

    fn mobius() -> impl Strategy<Value = M> {
        (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
            .prop_filter_map("nondegenerate", |(a, b, c, d)| M::new(g(a), g(b), g(c), g(d)).ok())
    }

    proptest! {
        #[test]
        fn group_laws(m1 in mobius(), m2 in mobius()) {
            prop_assert!(m1.compose(&m1.invert()).is_identity());
            prop_assert!(m1.invert().compose(&m1).is_identity());
            let x = R::x();
            // evaluation is covariant
            prop_assert_eq!(m1.compose(&m2).eval(&x).unwrap(), m1.eval(&m2.eval(&x).unwrap()).unwrap());
            // substitution is contravariant
            let r = R::new(UniPoly::from_coeffs(vec![g(1), g(0), g(1)]), UniPoly::from_coeffs(vec![g(2), g(1)])).unwrap();
            prop_assert_eq!(m1.compose(&m2).apply(&r), m2.apply(&m1.apply(&r)));
        }
    }
}
