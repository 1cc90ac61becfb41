//! The scalar abstraction every polynomial and map type is generic over.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::modp::PrimeField;

/// An exact field of characteristic zero.
///
/// Implemented for [`GaussRational`](super::GaussRational) (the default
/// coefficient field) and for `BigRational`.  Floating point types are
/// deliberately not supported: every identity this crate decides is decided
/// by structural equality of canonical forms.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    /// Product without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a.mul_ref(b);
    }

    /// Image under a ring morphism into `F_p`, `None` when a denominator
    /// vanishes modulo `p`.
    fn to_residue(&self, field: &PrimeField) -> Option<u64>;

    /// Multiplicative order when `self` is a root of unity.
    ///
    /// Must be exact: the field's full group of roots of unity is known.
    fn root_of_unity_order(&self) -> Option<u32>;

    /// Real and imaginary parts as floating point, for reporting only.
    fn to_complex_f64(&self) -> (f64, f64);

    fn is_rational(&self) -> bool;

    fn pow_i64(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_ref(&b);
            }
        }
        Some(acc)
    }
}

/// Search for multiplicative relations `a^i b^j = 1` with `|i|, |j| <= bound`.
///
/// Returns the nonzero exponent pairs found, normalized so that the first
/// nonzero entry is positive.  This is a bounded search, not a decision
/// procedure for multiplicative independence.
pub fn multiplicative_relations<F: Scalar>(a: &F, b: &F, bound: u32) -> Vec<(i64, i64)> {
    if a.is_zero() || b.is_zero() {
        return Vec::new();
    }
    let bound = bound as i64;
    let powers = |base: &F| -> Vec<F> {
        (-bound..=bound)
            .map(|e| base.pow_i64(e).expect("nonzero base"))
            .collect()
    };
    let pa = powers(a);
    let pb = powers(b);
    let mut out = Vec::new();
    for i in 0..=bound {
        for j in -bound..=bound {
            if i == 0 && j <= 0 {
                continue;
            }
            let lhs = pa[(i + bound) as usize].mul_ref(&pb[(j + bound) as usize]);
            if lhs.is_one() {
                out.push((i, j));
            }
        }
    }
    out
}
