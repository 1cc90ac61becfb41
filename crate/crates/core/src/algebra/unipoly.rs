//! Dense univariate polynomials over a [`Scalar`] field.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::modp::{PrimeField, CERTIFICATE_PRIMES};
use super::scalar::Scalar;
use super::AlgebraError;

/// Coefficients indexed by exponent, trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> UniPoly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); exp + 1];
        coeffs[exp] = c;
        UniPoly { coeffs }
    }

    /// `a·x + b`.
    pub fn linear(a: F, b: F) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Largest `k` with `x^k | self`; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Scaled so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at);
            acc += c;
        }
        acc
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&F::from_i64(k as i64)))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let db = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[db].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - db];
        while rem.len() > db {
            let top = rem.len() - 1;
            let q = rem[top].mul_ref(&lead_inv);
            if !q.is_zero() {
                let shift = top - db;
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &q.mul_ref(d);
                }
                quot[shift] = q;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::ZeroInput("gcd"));
        }
        if self.certified_coprime(other) {
            return Ok(Self::one());
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Modular proof that `self` and `other` are coprime; `false` means
    /// "not proven".  When the leading coefficient of `self` is a unit at the
    /// prime, the monic gcd is integral there and keeps its degree under
    /// reduction, so a constant gcd modulo `p` settles the question.
    fn certified_coprime(&self, other: &Self) -> bool {
        if self.degree().unwrap_or(0) == 0 || other.degree().unwrap_or(0) == 0 {
            return false;
        }
        CERTIFICATE_PRIMES.iter().take(2).any(|&p| {
            let field = PrimeField::new(p);
            let reduce = |q: &Self| q.coeffs.iter().map(|c| c.to_residue(&field)).collect::<Option<Vec<u64>>>();
            match (reduce(self), reduce(other)) {
                (Some(a), Some(b)) => a.last() != Some(&0) && field.poly_gcd_degree(&a, &b) == Some(0),
                _ => false,
            }
        })
    }

    /// Substitution `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = acc + Self::constant(c.clone());
        }
        acc
    }

    /// `self(c·x)`.
    pub fn scale_var(&self, c: &F) -> Self {
        let mut pow = F::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul_ref(&pow));
            pow = pow.mul_ref(c);
        }
        Self::from_coeffs(coeffs)
    }

    /// Homogenization `Σ a_k u^k v^(n-k)` evaluated with polynomial `u`, `v`.
    ///
    /// Used to substitute `x = u/v` and clear the denominator `v^n`.
    pub fn homogeneous_substitute(&self, u: &Self, v: &Self, n: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= n));
        let mut acc = Self::zero();
        let mut upow = Self::one();
        let vpows: Vec<Self> = {
            let mut out = Vec::with_capacity(n + 1);
            let mut p = Self::one();
            for _ in 0..=n {
                out.push(p.clone());
                p = &p * v;
            }
            out
        };
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = acc + (&upow * &vpows[n - k]).scale(a);
            }
            upow = &upow * u;
        }
        acc
    }
}

impl<F: Scalar> Zero for UniPoly<F> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Scalar> One for UniPoly<F> {
    fn one() -> Self {
        UniPoly::one()
    }
}

fn add_coeffs<F: Scalar>(a: &[F], b: &[F], negate_b: bool) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k);
        let y = b.get(k);
        let v = match (x, y) {
            (Some(x), Some(y)) => {
                if negate_b {
                    x.clone() - y
                } else {
                    x.clone() + y
                }
            }
            (Some(x), None) => x.clone(),
            (None, Some(y)) => {
                if negate_b {
                    -y.clone()
                } else {
                    y.clone()
                }
            }
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    out
}

impl<'a, F: Scalar> Add<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
        UniPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<F: Scalar> Add for UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a, F: Scalar> Sub<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
        UniPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<F: Scalar> Sub for UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a, F: Scalar> Mul<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<F: Scalar> Mul for UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Scalar> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> Self {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Scalar> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;
    use proptest::prelude::*;

    type P = UniPoly<GaussRational>;

    fn p(cs: &[i64]) -> P {
        P::from_coeffs(cs.iter().map(|&c| GaussRational::from(c)).collect())
    }

    #[test]
    fn gcd_of_difference_of_squares_and_linear_factor() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn gcd_with_unit_is_one() {
        assert_eq!(p(&[3, 5, 7]).gcd(&P::one()).unwrap(), P::one());
    }

    #[test]
    fn modular_shortcut_keeps_real_common_factors() {
        // ∏ (2ᵏx + 1) and ∏ (2ᵏx − 1) are coprime; multiplying both by
        // (3x − 1) must bring that factor back.
        let mut a = P::one();
        let mut b = P::one();
        for k in 0..12 {
            a = &a * &p(&[1, 1 << k]);
            b = &b * &p(&[-1, 1 << k]);
        }
        assert!(a.certified_coprime(&b));
        assert!(a.gcd(&b).unwrap().is_one());
        let common = p(&[-1, 3]);
        let g = (&a * &common).gcd(&(&b * &common)).unwrap();
        assert_eq!(g, common.monic());
        assert!(!(&a * &common).certified_coprime(&(&b * &common)));
    }

    #[test]
    fn gcd_of_zeros_is_rejected() {
        assert!(P::zero().gcd(&P::zero()).is_err());
    }

    #[test]
    fn compose_and_scale_var_agree() {
        let a = p(&[1, 2, 3]);
        let c = GaussRational::from(-2);
        assert_eq!(a.scale_var(&c), a.compose(&P::linear(c, GaussRational::zero())));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(-4i64..=4, 0..5).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn gcd_divides_and_cofactors_are_coprime(a in small_poly(), b in small_poly(), c in small_poly()) {
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.divides(&a));
            prop_assert!(g.divides(&b));
            let a1 = a.exact_div(&g).unwrap();
            let b1 = b.exact_div(&g).unwrap();
            if !(a1.is_zero() && b1.is_zero()) {
                prop_assert!(a1.gcd(&b1).unwrap().is_one());
            }
        }

        #[test]
        fn div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
