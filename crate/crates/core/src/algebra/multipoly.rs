//! Sparse multivariate polynomials with a fixed number of variables.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::AlgebraError;

pub type Exponent<const N: usize> = [u32; N];

/// Terms sorted by exponent in descending lexicographic order, no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly<F, const N: usize> {
    terms: Vec<(Exponent<N>, F)>,
}

/// Polynomials in `x, y`.
pub type BiPoly<F> = SparsePoly<F, 2>;

impl<F, const N: usize> SparsePoly<F, N> {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Scalar, const N: usize> SparsePoly<F, N> {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, [0; N])
    }

    pub fn monomial(c: F, exp: Exponent<N>) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparsePoly {
                terms: vec![(exp, c)],
            }
        }
    }

    /// The variable with index `k`.
    pub fn var(k: usize) -> Self {
        let mut e = [0; N];
        e[k] = 1;
        Self::monomial(F::one(), e)
    }

    /// Collect terms, summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent<N>, F)>>(terms: I) -> Self {
        let mut acc: HashMap<Exponent<N>, F> = HashMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&e) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(e, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Exponent<N>, F>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        SparsePoly { terms }
    }

    /// Wrap terms already sorted descending with distinct exponents.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Exponent<N>, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        SparsePoly { terms }
    }

    pub fn terms(&self) -> &[(Exponent<N>, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exponent<N>, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }


    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == [0; N])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, exp: &Exponent<N>) -> F {
        self.terms
            .binary_search_by(|(e, _)| exp.cmp(e))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// Leading term in lexicographic order.
    pub fn lead(&self) -> Option<&(Exponent<N>, F)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.iter().sum()).max()
    }

    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e[k]).max()
    }

    /// Componentwise minimum of the exponents (the largest monomial factor).
    pub fn monomial_content(&self) -> Exponent<N> {
        let mut out = [u32::MAX; N];
        for (e, _) in &self.terms {
            for k in 0..N {
                out[k] = out[k].min(e[k]);
            }
        }
        if self.terms.is_empty() {
            [0; N]
        } else {
            out
        }
    }

    /// Divide by the monomial `x^exp`; every term must be divisible.
    pub fn div_monomial(&self, exp: &Exponent<N>) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut out = *e;
                    for k in 0..N {
                        out[k] -= exp[k];
                    }
                    (out, c.clone())
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &F, exp: &Exponent<N>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| {
                    let mut out = *e;
                    for k in 0..N {
                        out[k] += exp[k];
                    }
                    (out, a.mul_ref(c))
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_monomial(c, &[0; N])
    }

    /// Scaled so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn eval(&self, point: &[F; N]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..N {
                if e[k] > 0 {
                    t = t.mul_ref(&point[k].pow_i64(e[k] as i64).expect("nonnegative power"));
                }
            }
            acc += &t;
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

    /// Partial derivative with respect to variable `k`.
    pub fn derivative(&self, k: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[k] > 0).map(|(e, c)| {
            let mut out = *e;
            out[k] -= 1;
            (out, c.mul_ref(&F::from_i64(e[k] as i64)))
        }))
    }

    /// Exact quotient by multivariate division; errors if `divisor` does not
    /// divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (dexp, dc) = divisor.lead().ok_or(AlgebraError::DivisionByZero)?;
        if divisor.is_monomial() {
            let inv = dc.inv().expect("nonzero");
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let mut out = *e;
                for k in 0..N {
                    out[k] = e[k].checked_sub(dexp[k]).ok_or(AlgebraError::InexactDivision)?;
                }
                terms.push((out, c.mul_ref(&inv)));
            }
            return Ok(SparsePoly { terms });
        }
        let dinv = dc.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rexp, rc)) = rem.lead().cloned() {
            let mut qexp = [0; N];
            for k in 0..N {
                qexp[k] = rexp[k].checked_sub(dexp[k]).ok_or(AlgebraError::InexactDivision)?;
            }
            let qc = rc.mul_ref(&dinv);
            rem = &rem - &divisor.mul_monomial(&qc, &qexp);
            quot.push((qexp, qc));
        }
        Ok(SparsePoly { terms: quot })
    }

    /// Substitute `x_k := value`, keeping the variable slot (with exponent 0).
    pub fn specialize(&self, k: usize, value: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut out = *e;
            out[k] = 0;
            (out, c.mul_ref(&value.pow_i64(e[k] as i64).expect("nonnegative")))
        }))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate { -c.clone() } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.clone() - &b[j].1
                    } else {
                        a[i].1.clone() + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparsePoly { terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_monomial(c, e);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_monomial(c, e);
        }
        let mut acc: HashMap<Exponent<N>, F> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for k in 0..N {
                    e[k] += eb[k];
                }
                match acc.get_mut(&e) {
                    Some(v) => v.add_mul(ca, cb),
                    None => {
                        acc.insert(e, ca.mul_ref(cb));
                    }
                }
            }
        }
        Self::from_map(acc)
    }
}

impl<'a, F: Scalar, const N: usize> Add<&'a SparsePoly<F, N>> for &'a SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn add(self, rhs: &'a SparsePoly<F, N>) -> SparsePoly<F, N> {
        self.merge(rhs, false)
    }
}

impl<'a, F: Scalar, const N: usize> Sub<&'a SparsePoly<F, N>> for &'a SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn sub(self, rhs: &'a SparsePoly<F, N>) -> SparsePoly<F, N> {
        self.merge(rhs, true)
    }
}

impl<'a, F: Scalar, const N: usize> Mul<&'a SparsePoly<F, N>> for &'a SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn mul(self, rhs: &'a SparsePoly<F, N>) -> SparsePoly<F, N> {
        self.mul_impl(rhs)
    }
}

impl<F: Scalar, const N: usize> Add for SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Scalar, const N: usize> Sub for SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Scalar, const N: usize> Mul for SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Scalar, const N: usize> Neg for SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn neg(self) -> Self {
        SparsePoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<F: Scalar, const N: usize> Neg for &SparsePoly<F, N> {
    type Output = SparsePoly<F, N>;
    fn neg(self) -> SparsePoly<F, N> {
        -self.clone()
    }
}

impl<F: Scalar, const N: usize> Zero for SparsePoly<F, N> {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Scalar, const N: usize> One for SparsePoly<F, N> {
    fn one() -> Self {
        SparsePoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;

    type B = BiPoly<GaussRational>;

    #[test]
    fn exact_division_recovers_factor() {
        let x = B::var(0);
        let y = B::var(1);
        let a = &(&x + &y) * &(&(&x * &x) - &y);
        let q = a.exact_div(&(&x + &y)).unwrap();
        assert_eq!(q, &(&x * &x) - &y);
        assert!(a.exact_div(&(&x + &B::one())).is_err());
    }

    #[test]
    fn monomial_content_is_exponent_minimum() {
        let x = B::var(0);
        let y = B::var(1);
        let p = &(&x * &y.pow(3)) + &(&x.pow(2) * &y);
        assert_eq!(p.monomial_content(), [1, 1]);
    }
}
