//! Rational functions of the affine coordinates `x, y`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::algebra::{gcd_bivariate, AlgebraError, BiPoly, RatFunc, Scalar, UniPoly};

/// `num / den` in lowest terms with a monic denominator (leading term in
/// lexicographic order has coefficient one).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiRatFunc<F> {
    num: BiPoly<F>,
    den: BiPoly<F>,
}

impl<F: Scalar> BiRatFunc<F> {
    pub fn new(num: BiPoly<F>, den: BiPoly<F>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd_bivariate(&num, &den)?;
            if g.is_constant() {
                (num, den)
            } else {
                (num.exact_div(&g)?, den.exact_div(&g)?)
            }
        };
        let inv = den.lead().expect("nonzero").1.inv().expect("nonzero");
        Ok(BiRatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: BiPoly<F>) -> Self {
        BiRatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }

    /// `x` for `k = 0`, `y` for `k = 1`.
    pub fn var(k: usize) -> Self {
        Self::from_poly(BiPoly::var(k))
    }

    /// A univariate rational function placed in variable `k`.
    pub fn from_ratfunc(r: &RatFunc<F>, k: usize) -> Self {
        BiRatFunc {
            num: embed(r.num(), k),
            den: embed(r.den(), k),
        }
    }

    pub fn num(&self) -> &BiPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &BiPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<F> {
        if self.num.is_zero() {
            return Some(F::zero());
        }
        self.is_constant().then(|| self.num.lead().expect("nonzero").1.clone())
    }

    /// Whether variable `k` occurs.
    pub fn depends_on(&self, k: usize) -> bool {
        self.num.degree_in(k).unwrap_or(0) > 0 || self.den.degree_in(k).unwrap_or(0) > 0
    }

    /// The univariate rational function when only variable `k` occurs.
    pub fn as_univariate(&self, k: usize) -> Option<RatFunc<F>> {
        if self.depends_on(1 - k) {
            return None;
        }
        Some(RatFunc::new(project(&self.num, k), project(&self.den, k)).expect("nonzero denominator"))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(exp.unsigned_abs()).map_err(|_| AlgebraError::Overflow)?;
        Ok(BiRatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exchange `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self::new(swap(&self.num), swap(&self.den)).expect("nonzero denominator")
    }

    /// Partial derivative in variable `k`.
    pub fn derivative(&self, k: usize) -> Self {
        let top = &(&self.num.derivative(k) * &self.den) - &(&self.num * &self.den.derivative(k));
        Self::new(top, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Coefficients `(A, B)` of `A(x)·y + B(x)` when `p` has degree at most
    /// one in `y`; the variable roles swap for `main = 0`.
    pub(crate) fn linear_in(p: &BiPoly<F>, main: usize) -> Option<(UniPoly<F>, UniPoly<F>)> {
        if p.degree_in(main).unwrap_or(0) > 1 {
            return None;
        }
        let other = 1 - main;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (e, c) in p.terms() {
            let slot = if e[main] == 1 { &mut a } else { &mut b };
            let i = e[other] as usize;
            if slot.len() <= i {
                slot.resize(i + 1, F::zero());
            }
            slot[i] = c.clone();
        }
        Some((UniPoly::from_coeffs(a), UniPoly::from_coeffs(b)))
    }
}

pub(crate) fn embed<F: Scalar>(p: &UniPoly<F>, k: usize) -> BiPoly<F> {
    BiPoly::from_terms(p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
        let mut e = [0u32; 2];
        e[k] = i as u32;
        (e, c.clone())
    }))
}

fn project<F: Scalar>(p: &BiPoly<F>, k: usize) -> UniPoly<F> {
    let deg = p.degree_in(k).unwrap_or(0) as usize;
    let mut coeffs = vec![F::zero(); deg + 1];
    for (e, c) in p.terms() {
        coeffs[e[k] as usize] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

fn swap<F: Scalar>(p: &BiPoly<F>) -> BiPoly<F> {
    BiPoly::from_terms(p.terms().iter().map(|(e, c)| ([e[1], e[0]], c.clone())))
}

impl<'a, F: Scalar> Add<&'a BiRatFunc<F>> for &'a BiRatFunc<F> {
    type Output = BiRatFunc<F>;
    fn add(self, rhs: &'a BiRatFunc<F>) -> BiRatFunc<F> {
        if self.den == rhs.den {
            return BiRatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        BiRatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero")
    }
}

impl<'a, F: Scalar> Sub<&'a BiRatFunc<F>> for &'a BiRatFunc<F> {
    type Output = BiRatFunc<F>;
    fn sub(self, rhs: &'a BiRatFunc<F>) -> BiRatFunc<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Scalar> Mul<&'a BiRatFunc<F>> for &'a BiRatFunc<F> {
    type Output = BiRatFunc<F>;
    fn mul(self, rhs: &'a BiRatFunc<F>) -> BiRatFunc<F> {
        if self.den.is_one() && rhs.den.is_one() {
            return BiRatFunc::from_poly(&self.num * &rhs.num);
        }
        BiRatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<F: Scalar> Neg for &BiRatFunc<F> {
    type Output = BiRatFunc<F>;
    fn neg(self) -> BiRatFunc<F> {
        BiRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;

    type R = BiRatFunc<GaussRational>;

    #[test]
    fn cancels_common_factors() {
        let x = R::var(0);
        let y = R::var(1);
        let xy = &x * &y;
        let q = xy.checked_div(&x).unwrap();
        assert_eq!(q, y);
        assert!(!q.depends_on(0));
    }

    #[test]
    fn denominator_is_monic() {
        let two_x = R::var(0).pow(1).unwrap();
        let r = R::constant(GaussRational::from(3))
            .checked_div(&(&two_x * &R::constant(GaussRational::from(2))))
            .unwrap();
        assert!(r.den().lead().unwrap().1.is_one());
        assert_eq!(r.num(), &BiPoly::constant(GaussRational::ratio(3, 2)));
    }

    #[test]
    fn linear_coefficients() {
        let p = (&(&R::var(0) * &R::var(1)) + &R::constant(GaussRational::from(5))).num().clone();
        let (a, b) = R::linear_in(&p, 1).unwrap();
        assert_eq!(a, UniPoly::x());
        assert_eq!(b, UniPoly::constant(GaussRational::from(5)));
    }
}
