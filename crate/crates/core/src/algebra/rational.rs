use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::modp::PrimeField;
use super::scalar::Scalar;

impl Scalar for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn to_residue(&self, field: &PrimeField) -> Option<u64> {
        let p = BigInt::from(field.modulus());
        let reduce = |n: &BigInt| n.mod_floor(&p).to_u64().expect("residue fits");
        let den = field.inv(reduce(self.denom()))?;
        Some(field.mul(reduce(self.numer()), den))
    }

    fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_one() {
            Some(1)
        } else if (-self).is_one() {
            Some(2)
        } else {
            None
        }
    }

    fn to_complex_f64(&self) -> (f64, f64) {
        (self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn is_rational(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn rational_roots_of_unity_are_plus_minus_one() {
        let two = BigRational::from_i64(2);
        assert_eq!(two.root_of_unity_order(), None);
        assert_eq!(BigRational::from_i64(-1).root_of_unity_order(), Some(2));
        assert!(!BigRational::from_i64(-3).is_positive());
    }
}
