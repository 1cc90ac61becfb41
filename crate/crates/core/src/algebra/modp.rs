//! Word-sized prime field arithmetic used for coprimality certificates.

/// `F_p` for a prime `p ≡ 1 (mod 4)` below `2^62`, together with a fixed
/// square root of `-1` so that Gaussian rationals reduce into it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    sqrt_neg_one: u64,
}

/// Primes `≡ 1 (mod 4)` tried in order by the certificate code.
pub const CERTIFICATE_PRIMES: [u64; 3] = [998_244_353, 1_000_000_009, 754_974_721];

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p % 4 == 1, "prime must be 1 mod 4");
        let mut field = PrimeField { p, sqrt_neg_one: 0 };
        let neg_one = p - 1;
        let mut c = 2;
        loop {
            let s = field.pow(c, (p - 1) / 4);
            if field.mul(s, s) == neg_one {
                field.sqrt_neg_one = s;
                return field;
            }
            c += 1;
        }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn sqrt_neg_one(&self) -> u64 {
        self.sqrt_neg_one
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Degree of the gcd of two dense polynomials (low-to-high coefficients).
    pub fn poly_gcd_degree(&self, a: &[u64], b: &[u64]) -> Option<usize> {
        let mut r0 = trim(a.to_vec());
        let mut r1 = trim(b.to_vec());
        if r0.is_empty() && r1.is_empty() {
            return None;
        }
        while !r1.is_empty() {
            let r = self.poly_rem(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        Some(r0.len() - 1)
    }

    fn poly_rem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]).expect("trimmed polynomial");
        while r.len() > db {
            let top = r.len() - 1;
            let q = self.mul(r[top], lead_inv);
            if q != 0 {
                let shift = top - db;
                for (k, &bk) in b.iter().enumerate() {
                    r[shift + k] = self.sub(r[shift + k], self.mul(q, bk));
                }
            }
            r.pop();
            r = trim(r);
        }
        r
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Deterministic splitmix64 stream for evaluation points.
#[derive(Debug, Clone)]
pub struct PointStream(u64);

impl PointStream {
    pub fn new(seed: u64) -> Self {
        PointStream(seed)
    }

    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        z % bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_minus_one_squares_to_minus_one() {
        for p in CERTIFICATE_PRIMES {
            let f = PrimeField::new(p);
            let s = f.sqrt_neg_one();
            assert_eq!(f.mul(s, s), p - 1);
        }
    }

    #[test]
    fn gcd_degree_detects_common_root() {
        let f = PrimeField::new(CERTIFICATE_PRIMES[0]);
        let p = f.modulus();
        // (s - 1)(s - 2) and (s - 1)(s + 5)
        let a = vec![2, p - 3, 1];
        let b = vec![p - 5, 4, 1];
        assert_eq!(f.poly_gcd_degree(&a, &b), Some(1));
        let c = vec![p - 3, 1];
        assert_eq!(f.poly_gcd_degree(&a, &c), Some(0));
    }
}
