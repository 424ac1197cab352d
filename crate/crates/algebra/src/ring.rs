//! Ring and field contexts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A commutative ring, represented as a context object.  Elements are plain
/// data (`Self::El`); all arithmetic goes through the context so that rings
/// needing runtime data (a modulus, a characteristic) fit the same interface
/// as `Q`.
pub trait Ring: Clone + fmt::Debug {
    type El: Clone + fmt::Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn from_i64(&self, n: i64) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn eq_el(&self, a: &Self::El, b: &Self::El) -> bool;
    /// Characteristic of the ring; 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::El) -> bool {
        self.eq_el(a, &self.zero())
    }
    fn is_one(&self, a: &Self::El) -> bool {
        self.eq_el(a, &self.one())
    }
    fn pow_u64(&self, a: &Self::El, mut e: u64) -> Self::El {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
    fn fmt_el(&self, a: &Self::El) -> String {
        format!("{a:?}")
    }
}

/// A field: a ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero (or a non-unit in contexts
    /// that are only generically fields, such as a quotient by a reducible
    /// modulus).
    fn inv(&self, a: &Self::El) -> Option<Self::El>;

    fn div(&self, a: &Self::El, b: &Self::El) -> Option<Self::El> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// The image of the rational number n/d, with d invertible.
    fn from_ratio(&self, n: i64, d: i64) -> Self::El {
        self.div(&self.from_i64(n), &self.from_i64(d))
            .expect("denominator must be invertible in this field")
    }

    fn pow_i64(&self, a: &Self::El, e: i64) -> Option<Self::El> {
        if e >= 0 {
            Some(self.pow_u64(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow_u64(&ai, e.unsigned_abs()))
        }
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type El = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn eq_el(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn fmt_el(&self, a: &BigRational) -> String {
        format!("{a}")
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

impl Rationals {
    pub fn from_bigint(&self, n: BigInt) -> BigRational {
        BigRational::from_integer(n)
    }

    pub fn ratio(&self, n: i64, d: i64) -> BigRational {
        assert!(d != 0);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn abs(&self, a: &BigRational) -> BigRational {
        a.abs()
    }
}

/// The prime field F_p for a u64 prime, elements stored reduced in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(crate::arith::is_prime_u64(p), "{p} is not prime");
        assert!(p < (1 << 62));
        Fp { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

impl Ring for Fp {
    type El = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn eq_el(&self, a: &u64, b: &u64) -> bool {
        a == b
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn fmt_el(&self, a: &u64) -> String {
        format!("{a}")
    }
}

impl Field for Fp {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow_u64(a, self.p - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_basics() {
        let f13 = Fp::new(13);
        assert_eq!(f13.from_i64(-1), 12);
        assert_eq!(f13.mul(&7, &2), 1);
        assert_eq!(f13.inv(&2), Some(7));
        assert_eq!(f13.inv(&0), None);
        assert_eq!(f13.pow_u64(&2, 12), 1);
    }

    #[test]
    fn rationals_exactness_randomized() {
        // (a/b + c/d) * (b*d) == a*d + c*b for random inputs.
        let q = Rationals;
        let mut rng = crate::rng::SplitMix64::new(0x5eed);
        for _ in 0..200 {
            let a = rng.i64_in(-1000, 1000);
            let b = rng.nonzero_i64(1000);
            let c = rng.i64_in(-1000, 1000);
            let d = rng.nonzero_i64(1000);
            let lhs = q.mul(
                &q.add(&q.ratio(a, b), &q.ratio(c, d)),
                &q.from_i64(b * d),
            );
            let rhs = q.from_i64(a * d + c * b);
            assert!(q.eq_el(&lhs, &rhs));
        }
    }
}
