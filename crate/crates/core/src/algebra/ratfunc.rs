//! Univariate rational functions in lowest terms.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::mobius::Mobius;
use super::scalar::Scalar;
use super::unipoly::UniPoly;
use super::AlgebraError;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Scalar> RatFunc<F> {
    /// Reduce `num / den` to canonical form.
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc_inv = den.lc().expect("nonzero").inv().expect("nonzero");
        Ok(RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    /// `c·x^k` for any integer `k`.
    pub fn monomial(c: F, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(UniPoly::monomial(c, k as usize))
        } else {
            RatFunc {
                num: UniPoly::constant(c),
                den: UniPoly::monomial(F::one(), k.unsigned_abs() as usize),
            }
        }
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value when this function is constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RatFunc::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, c: &F) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() {
                UniPoly::one()
            } else {
                self.den.clone()
            },
        }
    }

    pub fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(exp.unsigned_abs()).map_err(|_| AlgebraError::Overflow)?;
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn eval(&self, at: &F) -> Option<F> {
        let d = self.den.eval(at);
        d.inv().map(|di| self.num.eval(at).mul_ref(&di))
    }

    /// Substitution `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        let n = self.degree();
        let (u, v) = (&inner.num, &inner.den);
        let top = self.num.homogeneous_substitute(u, v, n);
        let bottom = self.den.homogeneous_substitute(u, v, n);
        RatFunc::new(top, bottom)
    }

    /// `self(c·x)`.
    pub fn scale_var(&self, c: &F) -> Result<Self, AlgebraError> {
        if c.is_zero() {
            return self.compose(&Self::zero());
        }
        RatFunc::new(self.num.scale_var(c), self.den.scale_var(c))
    }

    /// Substitution `self(m(x))` for a Möbius transformation `m`.
    pub fn substitute(&self, m: &Mobius<F>) -> Self {
        self.compose(&m.as_ratfunc())
            .expect("Möbius substitution keeps a nonzero denominator")
    }

    /// Largest `k` such that `x^k` divides numerator (positive) or
    /// denominator (negative).
    pub fn x_valuation(&self) -> i64 {
        let vn = self.num.valuation().unwrap_or(0) as i64;
        let vd = self.den.valuation().unwrap_or(0) as i64;
        vn - vd
    }

    /// Membership in `F(x^k)`: every exponent of the reduced numerator and
    /// denominator is a multiple of `k`.
    pub fn is_function_of_power(&self, k: usize) -> bool {
        if k <= 1 {
            return true;
        }
        self.num.support().all(|e| e % k == 0) && self.den.support().all(|e| e % k == 0)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(top, &self.den * &self.den).expect("nonzero denominator")
    }
}

/// `Some(κ)` when `r = κ·s` for a nonzero constant `κ`.
///
/// Decided by the exact identity `r.num·s.den = κ·s.num·r.den`.
pub fn is_constant_ratio<F: Scalar>(r: &RatFunc<F>, s: &RatFunc<F>) -> Result<Option<F>, AlgebraError> {
    if s.is_zero() {
        return Err(AlgebraError::ZeroInput("is_constant_ratio"));
    }
    let lhs = r.num() * s.den();
    let rhs = s.num() * r.den();
    let kappa = match (lhs.lc(), rhs.lc()) {
        (None, _) => return Ok(None),
        (Some(a), Some(b)) => a.mul_ref(&b.inv().expect("nonzero")),
        (Some(_), None) => unreachable!("s is nonzero"),
    };
    if lhs == rhs.scale(&kappa) {
        Ok(Some(kappa))
    } else {
        Ok(None)
    }
}

impl<'a, F: Scalar> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero")
    }
}

impl<'a, F: Scalar> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Scalar> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<F: Scalar> Add for RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Scalar> Sub for RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Scalar> Mul for RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Scalar> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Scalar> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<F: Scalar> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Scalar> One for RatFunc<F> {
    fn one() -> Self {
        RatFunc::one()
    }
}
