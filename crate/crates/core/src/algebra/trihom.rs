//! Homogeneous polynomials in `x, y, z`.

use std::ops::{Add, Mul, Neg, Sub};


use super::multipoly::{BiPoly, Exponent, SparsePoly};
use super::scalar::Scalar;
use super::AlgebraError;

/// Dense accumulation is used for products whose `(degree + 1)^2` slot
/// count stays below this.
const DENSE_SLOTS: usize = 1 << 19;

/// A homogeneous polynomial of a fixed total degree.
///
/// The zero polynomial has no terms but still carries the degree it was
/// created with, so the components of a map keep equal degrees.
#[derive(Clone, Debug)]
pub struct TriHomPoly<F> {
    degree: u32,
    poly: SparsePoly<F, 3>,
}

impl<F: PartialEq> PartialEq for TriHomPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.poly.is_empty() && other.poly.is_empty() {
            return true;
        }
        self.degree == other.degree && self.poly == other.poly
    }
}

impl<F: Eq> Eq for TriHomPoly<F> {}

// Zero polynomials of any degree are equal, so they must hash alike.
impl<F: std::hash::Hash> std::hash::Hash for TriHomPoly<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        if !self.poly.is_empty() {
            self.degree.hash(state);
        }
        self.poly.hash(state);
    }
}

impl<F: Scalar> TriHomPoly<F> {
    /// Errors unless every term has total degree `degree`.
    pub fn new(degree: u32, poly: SparsePoly<F, 3>) -> Result<Self, AlgebraError> {
        if poly.terms().iter().any(|(e, _)| e.iter().sum::<u32>() != degree) {
            return Err(AlgebraError::NotHomogeneous);
        }
        Ok(TriHomPoly { degree, poly })
    }

    /// Homogeneous part, inferring the degree from the terms.
    pub fn from_poly(poly: SparsePoly<F, 3>) -> Result<Self, AlgebraError> {
        let degree = poly.total_degree().unwrap_or(0);
        Self::new(degree, poly)
    }

    pub fn zero(degree: u32) -> Self {
        TriHomPoly {
            degree,
            poly: SparsePoly::zero(),
        }
    }

    pub fn monomial(c: F, exp: Exponent<3>) -> Self {
        TriHomPoly {
            degree: exp.iter().sum(),
            poly: SparsePoly::monomial(c, exp),
        }
    }

    /// `x`, `y` or `z` for `k = 0, 1, 2`.
    pub fn var(k: usize) -> Self {
        let mut e = [0; 3];
        e[k] = 1;
        Self::monomial(F::one(), e)
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &SparsePoly<F, 3> {
        &self.poly
    }

    pub fn terms(&self) -> &[(Exponent<3>, F)] {
        self.poly.terms()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.poly.is_monomial()
    }

    pub fn lead(&self) -> Option<&(Exponent<3>, F)> {
        self.poly.lead()
    }

    pub fn coeff(&self, exp: &Exponent<3>) -> F {
        self.poly.coeff(exp)
    }

    pub fn scale(&self, c: &F) -> Self {
        TriHomPoly {
            degree: self.degree,
            poly: self.poly.scale(c),
        }
    }

    pub fn monic(&self) -> Self {
        TriHomPoly {
            degree: self.degree,
            poly: self.poly.monic(),
        }
    }

    pub fn monomial_content(&self) -> Exponent<3> {
        self.poly.monomial_content()
    }

    pub fn div_monomial(&self, exp: &Exponent<3>) -> Self {
        TriHomPoly {
            degree: self.degree - exp.iter().sum::<u32>(),
            poly: self.poly.div_monomial(exp),
        }
    }

    pub fn mul_monomial(&self, c: &F, exp: &Exponent<3>) -> Self {
        TriHomPoly {
            degree: self.degree + exp.iter().sum::<u32>(),
            poly: self.poly.mul_monomial(c, exp),
        }
    }

    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        if divisor.degree > self.degree && !self.is_zero() {
            return Err(AlgebraError::InexactDivision);
        }
        Ok(TriHomPoly {
            degree: self.degree.saturating_sub(divisor.degree),
            poly: self.poly.exact_div(&divisor.poly)?,
        })
    }

    pub fn eval(&self, point: &[F; 3]) -> F {
        self.poly.eval(point)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(F::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(0:x, 1:y, 2:z)` with the variables replaced by homogeneous
    /// polynomials of one common degree.
    pub fn substitute(&self, args: &[TriHomPoly<F>; 3]) -> Self {
        let d = args[0].degree;
        debug_assert!(args.iter().all(|a| a.degree == d));
        let out_degree = self.degree * d;
        if self.is_zero() {
            return Self::zero(out_degree);
        }
        let mut powers: [Vec<TriHomPoly<F>>; 3] = Default::default();
        for (k, pw) in powers.iter_mut().enumerate() {
            let max = self.terms().iter().map(|(e, _)| e[k]).max().unwrap_or(0);
            pw.push(Self::constant(F::one()));
            for i in 1..=max as usize {
                let next = &pw[i - 1] * &args[k];
                pw.push(next);
            }
        }
        let mut acc = Self::zero(out_degree);
        for (e, c) in self.terms() {
            let t = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize])
                * &powers[2][e[2] as usize];
            acc = &acc + &t.scale(c);
        }
        acc
    }

    /// `self(x, y, 1)`.
    pub fn dehomogenize(&self) -> BiPoly<F> {
        BiPoly::from_terms(self.terms().iter().map(|(e, c)| ([e[0], e[1]], c.clone())))
    }

    /// `z^degree · p(x/z, y/z)`.
    pub fn homogenize(p: &BiPoly<F>, degree: u32) -> Result<Self, AlgebraError> {
        if p.total_degree().is_some_and(|d| d > degree) {
            return Err(AlgebraError::NotHomogeneous);
        }
        let terms = p
            .terms()
            .iter()
            .map(|(e, c)| ([e[0], e[1], degree - e[0] - e[1]], c.clone()));
        Ok(TriHomPoly {
            degree,
            poly: SparsePoly::from_terms(terms),
        })
    }

    /// Swap the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        TriHomPoly {
            degree: self.degree,
            poly: SparsePoly::from_terms(
                self.terms().iter().map(|(e, c)| ([e[1], e[0], e[2]], c.clone())),
            ),
        }
    }

    fn mul_dense(&self, other: &Self) -> Self {
        let d = (self.degree + other.degree) as usize;
        let width = d + 1;
        let mut slots: Vec<Option<F>> = vec![None; width * width];
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let idx = (ea[0] + eb[0]) as usize * width + (ea[1] + eb[1]) as usize;
                match &mut slots[idx] {
                    Some(v) => v.add_mul(ca, cb),
                    slot @ None => *slot = Some(ca.mul_ref(cb)),
                }
            }
        }
        let mut terms = Vec::new();
        for i in (0..width).rev() {
            for j in (0..width - i).rev() {
                if let Some(c) = slots[i * width + j].take() {
                    if !c.is_zero() {
                        terms.push(([i as u32, j as u32, (d - i - j) as u32], c));
                    }
                }
            }
        }
        TriHomPoly {
            degree: d as u32,
            poly: SparsePoly::from_sorted_unchecked(terms),
        }
    }
}

impl<'a, F: Scalar> Add<&'a TriHomPoly<F>> for &'a TriHomPoly<F> {
    type Output = TriHomPoly<F>;
    fn add(self, rhs: &'a TriHomPoly<F>) -> TriHomPoly<F> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        TriHomPoly {
            degree: self.degree,
            poly: &self.poly + &rhs.poly,
        }
    }
}

impl<'a, F: Scalar> Sub<&'a TriHomPoly<F>> for &'a TriHomPoly<F> {
    type Output = TriHomPoly<F>;
    fn sub(self, rhs: &'a TriHomPoly<F>) -> TriHomPoly<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Scalar> Mul<&'a TriHomPoly<F>> for &'a TriHomPoly<F> {
    type Output = TriHomPoly<F>;
    fn mul(self, rhs: &'a TriHomPoly<F>) -> TriHomPoly<F> {
        let degree = self.degree + rhs.degree;
        if self.is_zero() || rhs.is_zero() {
            return TriHomPoly::zero(degree);
        }
        let width = degree as usize + 1;
        if self.is_monomial() || rhs.is_monomial() || width * width > DENSE_SLOTS {
            return TriHomPoly {
                degree,
                poly: &self.poly * &rhs.poly,
            };
        }
        self.mul_dense(rhs)
    }
}

impl<F: Scalar> Neg for &TriHomPoly<F> {
    type Output = TriHomPoly<F>;
    fn neg(self) -> TriHomPoly<F> {
        TriHomPoly {
            degree: self.degree,
            poly: -&self.poly,
        }
    }
}

impl<F: Scalar> Neg for TriHomPoly<F> {
    type Output = TriHomPoly<F>;
    fn neg(self) -> Self {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;
    use proptest::prelude::*;

    type T = TriHomPoly<GaussRational>;

    fn form(deg: u32, coeffs: &[i64]) -> T {
        let mut terms = Vec::new();
        let mut it = coeffs.iter();
        for i in 0..=deg {
            for j in 0..=(deg - i) {
                if let Some(&c) = it.next() {
                    terms.push(([i, j, deg - i - j], GaussRational::from(c)));
                }
            }
        }
        T::new(deg, SparsePoly::from_terms(terms)).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous() {
        let p = SparsePoly::from_terms([([1, 0, 0], GaussRational::from(1)), ([0, 0, 0], GaussRational::from(1))]);
        assert!(T::new(1, p).is_err());
    }

    proptest! {
        #[test]
        fn dense_and_sparse_products_agree(
            a in prop::collection::vec(-3i64..=3, 1..10),
            b in prop::collection::vec(-3i64..=3, 1..10),
        ) {
            let p = form(3, &a);
            let q = form(2, &b);
            let dense = if p.is_zero() || q.is_zero() { T::zero(5) } else { p.mul_dense(&q) };
            let sparse = T::new(5, &p.poly * &q.poly).unwrap();
            prop_assert_eq!(dense, sparse);
        }

        #[test]
        fn homogenize_inverts_dehomogenize(a in prop::collection::vec(-3i64..=3, 1..10)) {
            let p = form(3, &a);
            prop_assert_eq!(T::homogenize(&p.dehomogenize(), 3).unwrap(), p);
        }
    }
}
