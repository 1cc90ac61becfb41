//! Gaussian rationals `ℚ(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::PrimeField;
use super::scalar::Scalar;

/// An element `(re + im·i) / den` of `ℚ(i)`.
///
/// Stored over a common positive denominator with `gcd(re, im, den) = 1`, so
/// equal values are structurally equal.  [`GaussRational::re`] and
/// [`GaussRational::im`] return the two coordinates in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    re: BigInt,
    im: BigInt,
    den: BigInt,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        let den = re.denom().lcm(im.denom());
        let r = re.numer() * (&den / re.denom());
        let i = im.numer() * (&den / im.denom());
        Self::from_parts(r, i, den)
    }

    pub fn from_integer(n: BigInt) -> Self {
        GaussRational {
            re: n,
            im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    /// `re_num/re_den + (im_num/im_den)·i`.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Self::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_fractions(num, den, 0, 1)
    }

    pub fn i() -> Self {
        GaussRational {
            re: BigInt::zero(),
            im: BigInt::one(),
            den: BigInt::one(),
        }
    }

    fn from_parts(re: BigInt, im: BigInt, den: BigInt) -> Self {
        let mut out = GaussRational { re, im, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.re = -&self.re;
            self.im = -&self.im;
            self.den = -&self.den;
        }
        if self.den.is_one() {
            return;
        }
        if self.re.is_zero() && self.im.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.re.gcd(&self.im).gcd(&self.den);
        if !g.is_one() {
            self.re /= &g;
            self.im /= &g;
            self.den /= &g;
        }
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.re.clone(), self.den.clone())
    }

    pub fn im(&self) -> BigRational {
        BigRational::new(self.im.clone(), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -&self.im,
            den: self.den.clone(),
        }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        BigRational::new(
            &self.re * &self.re + &self.im * &self.im,
            &self.den * &self.den,
        )
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// True iff some positive power equals one.
    ///
    /// The roots of unity of `ℚ(i)` are exactly `±1` and `±i`.
    pub fn is_root_of_unity(&self) -> Result<bool, super::AlgebraError> {
        if self.is_zero() {
            return Err(super::AlgebraError::ZeroInput("is_root_of_unity"));
        }
        Ok(self.root_of_unity_order().is_some())
    }
}

impl Scalar for GaussRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(GaussRational::from_parts(
                self.den.clone(),
                BigInt::zero(),
                self.re.clone(),
            ));
        }
        // den / (re + im i) = den (re - im i) / (re² + im²)
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRational::from_parts(
            &self.den * &self.re,
            -(&self.den * &self.im),
            n,
        ))
    }

    fn from_i64(n: i64) -> Self {
        GaussRational::from_integer(BigInt::from(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let (re, im) = if self.im.is_zero() && other.im.is_zero() {
            (&self.re * &other.re, BigInt::zero())
        } else if self.im.is_zero() {
            (&self.re * &other.re, &self.re * &other.im)
        } else if other.im.is_zero() {
            (&self.re * &other.re, &self.im * &other.re)
        } else {
            (
                &self.re * &other.re - &self.im * &other.im,
                &self.re * &other.im + &self.im * &other.re,
            )
        };
        if self.den.is_one() && other.den.is_one() {
            GaussRational {
                re,
                im,
                den: BigInt::one(),
            }
        } else {
            GaussRational::from_parts(re, im, &self.den * &other.den)
        }
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if self.den.is_one() && a.den.is_one() && b.den.is_one() {
            if a.im.is_zero() && b.im.is_zero() {
                self.re += &a.re * &b.re;
            } else {
                self.re += &a.re * &b.re - &a.im * &b.im;
                self.im += &a.re * &b.im + &a.im * &b.re;
            }
            return;
        }
        let prod = a.mul_ref(b);
        *self += &prod;
    }

    fn to_residue(&self, field: &PrimeField) -> Option<u64> {
        let p = BigInt::from(field.modulus());
        let reduce = |n: &BigInt| n.mod_floor(&p).to_u64().expect("residue fits");
        let den = field.inv(reduce(&self.den))?;
        let num = field.add(
            reduce(&self.re),
            field.mul(reduce(&self.im), field.sqrt_neg_one()),
        );
        Some(field.mul(num, den))
    }

    fn root_of_unity_order(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        let one = BigInt::one();
        match (self.re.abs() == one, self.im.abs() == one) {
            (true, false) if self.im.is_zero() => Some(if self.re.is_positive() { 1 } else { 2 }),
            (false, true) if self.re.is_zero() => Some(4),
            _ => None,
        }
    }

    fn to_complex_f64(&self) -> (f64, f64) {
        let re = self.re().to_f64().unwrap_or(f64::NAN);
        let im = self.im().to_f64().unwrap_or(f64::NAN);
        (re, im)
    }

    fn is_rational(&self) -> bool {
        self.im.is_zero()
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational {
            re: BigInt::zero(),
            im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::from_integer(BigInt::one())
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.re.is_one() && self.im.is_zero()
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_i64(n)
    }
}

impl From<BigRational> for GaussRational {
    fn from(q: BigRational) -> Self {
        GaussRational::new(q, BigRational::zero())
    }
}

fn add_parts(a: &GaussRational, b: &GaussRational, sign: bool) -> GaussRational {
    let combine = |x: BigInt, y: BigInt| if sign { x + y } else { x - y };
    if a.den == b.den {
        let re = combine(a.re.clone(), b.re.clone());
        let im = combine(a.im.clone(), b.im.clone());
        if a.den.is_one() {
            return GaussRational {
                re,
                im,
                den: BigInt::one(),
            };
        }
        return GaussRational::from_parts(re, im, a.den.clone());
    }
    GaussRational::from_parts(
        combine(&a.re * &b.den, &b.re * &a.den),
        combine(&a.im * &b.den, &b.im * &a.den),
        &a.den * &b.den,
    )
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: Self) -> Self {
        add_parts(&self, &rhs, true)
    }
}

impl<'a> Add<&'a GaussRational> for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &'a GaussRational) -> Self {
        add_parts(&self, rhs, true)
    }
}

impl<'b> Add<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &'b GaussRational) -> GaussRational {
        add_parts(self, rhs, true)
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: Self) -> Self {
        add_parts(&self, &rhs, false)
    }
}

impl<'a> Sub<&'a GaussRational> for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &'a GaussRational) -> Self {
        add_parts(&self, rhs, false)
    }
}

impl<'b> Sub<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &'b GaussRational) -> GaussRational {
        add_parts(self, rhs, false)
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a GaussRational> for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &'a GaussRational) -> Self {
        self.mul_ref(rhs)
    }
}

impl<'b> Mul<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &'b GaussRational) -> GaussRational {
        self.mul_ref(rhs)
    }
}

impl Div for GaussRational {
    type Output = GaussRational;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: Self) -> Self {
        self.mul_ref(&rhs.inv().expect("division by zero"))
    }
}

impl<'b> Div<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &'b GaussRational) -> GaussRational {
        self.mul_ref(&rhs.inv().expect("division by zero"))
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> Self {
        GaussRational {
            re: -self.re,
            im: -self.im,
            den: self.den,
        }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -&self.re,
            im: -&self.im,
            den: self.den.clone(),
        }
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: Self) {
        *self = add_parts(self, &rhs, true);
    }
}

impl<'a> AddAssign<&'a GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &'a GaussRational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.re += &rhs.re;
            self.im += &rhs.im;
        } else {
            *self = add_parts(self, rhs, true);
        }
    }
}

impl SubAssign for GaussRational {
    fn sub_assign(&mut self, rhs: Self) {
        *self = add_parts(self, &rhs, false);
    }
}

impl<'a> SubAssign<&'a GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &'a GaussRational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.re -= &rhs.re;
            self.im -= &rhs.im;
        } else {
            *self = add_parts(self, rhs, false);
        }
    }
}

impl MulAssign for GaussRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.mul_ref(&rhs);
    }
}

fn fmt_rational(n: &BigInt, d: &BigInt) -> String {
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for GaussRational {
    /// Prints in the scalar literal syntax accepted by the map parser, e.g.
    /// `3/2`, `1 + 2*i`, `-i`, `1/2 - 3/4*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = self.re();
        let im = self.im();
        let imag = |q: &BigRational| -> String {
            let a = q.abs();
            if a.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", fmt_rational(a.numer(), a.denom()))
            }
        };
        match (re.is_zero(), im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(re.numer(), re.denom())),
            (true, false) => {
                if im.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{}", imag(&im))
            }
            (false, false) => {
                let sign = if im.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{} {} {}",
                    fmt_rational(re.numer(), re.denom()),
                    sign,
                    imag(&im)
                )
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> GaussRational {
        GaussRational::from_fractions(a, b, c, d)
    }

    #[test]
    fn canonical_form_of_equal_values() {
        assert_eq!(q(2, 4, 6, 8), q(1, 2, 3, 4));
        assert_eq!(q(-1, -2, 0, 1), q(1, 2, 0, 1));
        assert_eq!(q(1, 2, 0, 1).re(), BigRational::new(1.into(), 2.into()));
        assert_eq!(q(1, 2, 3, 4).im(), BigRational::new(3.into(), 4.into()));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(i.mul_ref(&i), GaussRational::from_i64(-1));
    }

    #[test]
    fn roots_of_unity() {
        assert!(GaussRational::i().is_root_of_unity().unwrap());
        assert!(GaussRational::from_i64(-1).is_root_of_unity().unwrap());
        assert!(!GaussRational::from_i64(2).is_root_of_unity().unwrap());
        // (3+4i)/5 has norm one but is not a root of unity.
        let z = q(3, 5, 4, 5);
        assert!(!z.is_root_of_unity().unwrap());
        let mut acc = z.clone();
        for _ in 1..=8 {
            assert!(!acc.is_one());
            acc = acc.mul_ref(&z);
        }
        assert!(GaussRational::zero().is_root_of_unity().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(GaussRational::one().root_of_unity_order(), Some(1));
        assert_eq!(GaussRational::from_i64(-1).root_of_unity_order(), Some(2));
        assert_eq!((-GaussRational::i()).root_of_unity_order(), Some(4));
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(3, 2, 0, 1).to_string(), "3/2");
        assert_eq!(q(1, 1, 2, 1).to_string(), "1 + 2*i");
        assert_eq!(q(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(q(1, 2, -3, 4).to_string(), "1/2 - 3/4*i");
    }

    fn small() -> impl Strategy<Value = GaussRational> {
        (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5).prop_map(|(a, b, c, d)| q(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
            prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
            if !a.is_zero() {
                prop_assert!(a.mul_ref(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn non_roots_have_no_small_power_equal_to_one(a in small()) {
            prop_assume!(!a.is_zero());
            if !a.is_root_of_unity().unwrap() {
                let mut acc = a.clone();
                for _ in 1..=24 {
                    prop_assert!(!acc.is_one());
                    acc = acc.mul_ref(&a);
                }
            }
        }

        #[test]
        fn residues_are_ring_morphisms(a in small(), b in small()) {
            let f = PrimeField::new(super::super::modp::CERTIFICATE_PRIMES[0]);
            let (ra, rb) = (a.to_residue(&f).unwrap(), b.to_residue(&f).unwrap());
            prop_assert_eq!((a.clone() * &b).to_residue(&f).unwrap(), f.mul(ra, rb));
            prop_assert_eq!((a + &b).to_residue(&f).unwrap(), f.add(ra, rb));
        }
    }
}
