//! Integer helpers: primality, p-adic valuations of rationals, small
//! factorization.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// p-adic order of a rational number: the exponent of p, or +infinity for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PadicOrder {
    Finite(i64),
    Infinity,
}

impl PadicOrder {
    pub fn finite(self) -> Option<i64> {
        match self {
            PadicOrder::Finite(n) => Some(n),
            PadicOrder::Infinity => None,
        }
    }

    pub fn expect_finite(self) -> i64 {
        self.finite().expect("valuation of zero")
    }
}

impl std::fmt::Display for PadicOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PadicOrder::Finite(n) => write!(f, "{n}"),
            PadicOrder::Infinity => write!(f, "+inf"),
        }
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exponent of the prime p in a nonzero integer.
pub fn ord_p_int(n: &BigInt, p: u64) -> PadicOrder {
    if n.is_zero() {
        return PadicOrder::Infinity;
    }
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = m.div_rem(&p);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return PadicOrder::Finite(v);
        }
    }
}

/// Exponent of the prime p in a rational number; +infinity for 0.
/// Rejects non-prime p.
pub fn ord_p(x: &BigRational, p: u64) -> PadicOrder {
    assert!(is_prime_u64(p), "ord_p requires a prime, got {p}");
    if x.is_zero() {
        return PadicOrder::Infinity;
    }
    let vn = ord_p_int(x.numer(), p).expect_finite();
    let vd = ord_p_int(x.denom(), p).expect_finite();
    PadicOrder::Finite(vn - vd)
}

/// Factor a positive integer by trial division.  Errors out (rather than
/// stalling) if a cofactor above the trial bound squared remains composite.
pub fn factor_biguint(n: &BigUint) -> Result<Vec<(BigUint, u32)>, FactorError> {
    const TRIAL_BOUND: u64 = 10_000_000;
    let mut n = n.clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() {
        return Err(FactorError::Zero);
    }
    let mut push = |p: BigUint, e: u32| {
        out.push((p, e));
    };
    let mut d = 2u64;
    while !n.is_one() {
        if d > TRIAL_BOUND {
            // Whatever remains must be prime for us to finish.
            if biguint_is_probable_prime(&n) {
                push(n, 1);
                break;
            }
            return Err(FactorError::TooLarge);
        }
        let db = BigUint::from(d);
        if (&n % &db).is_zero() {
            let mut e = 0u32;
            while (&n % &db).is_zero() {
                n /= &db;
                e += 1;
            }
            push(db, e);
        }
        d = if d == 2 { 3 } else { d + 2 };
        // Early exit: if d^2 > n the remainder is prime.
        if !n.is_one() {
            let d2 = BigUint::from(d) * BigUint::from(d);
            if d2 > n {
                push(n.clone(), 1);
                n = BigUint::one();
            }
        }
    }
    Ok(out)
}

fn biguint_is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    // Miller-Rabin with fixed bases; inputs in this project stay far below
    // the range where this matters.
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let nm1 = n - &one;
    let s = ord_p_int(&BigInt::from(nm1.clone()), 2).expect_finite() as u32;
    let d = &nm1 >> s;
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorError {
    Zero,
    TooLarge,
}

impl std::fmt::Display for FactorError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorError::Zero => write!(f, "cannot factor zero"),
            FactorError::TooLarge => write!(f, "factorization exceeded the trial-division bound"),
        }
    }
}

impl std::error::Error for FactorError {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn ord7_examples() {
        // ord_7(7/2) = 1.
        let x = BigRational::new(BigInt::from(7), BigInt::from(2));
        assert_eq!(ord_p(&x, 7), PadicOrder::Finite(1));
        // f1(3) = 27 - 18 - 3 + 1 = 7.
        assert_eq!(
            ord_p(&BigRational::from_i64(7).unwrap(), 7),
            PadicOrder::Finite(1)
        );
        // -7^3 f1(0) f2(0)^7 = -343.
        assert_eq!(
            ord_p(&BigRational::from_i64(-343).unwrap(), 7),
            PadicOrder::Finite(3)
        );
        assert_eq!(ord_p(&BigRational::zero(), 7), PadicOrder::Infinity);
    }

    #[test]
    fn ord_is_additive() {
        let mut rng = crate::rng::SplitMix64::new(42);
        for _ in 0..200 {
            let a = BigRational::new(
                BigInt::from(rng.nonzero_i64(100_000)),
                BigInt::from(rng.nonzero_i64(100_000)),
            );
            let b = BigRational::new(
                BigInt::from(rng.nonzero_i64(100_000)),
                BigInt::from(rng.nonzero_i64(100_000)),
            );
            let va = ord_p(&a, 7).expect_finite();
            let vb = ord_p(&b, 7).expect_finite();
            assert_eq!(ord_p(&(&a * &b), 7), PadicOrder::Finite(va + vb));
        }
    }

    #[test]
    #[should_panic]
    fn ord_rejects_composite() {
        let _ = ord_p(&BigRational::one(), 6);
    }

    #[test]
    fn factoring() {
        let n = BigUint::from(6002451u64);
        let f = factor_biguint(&n).unwrap();
        let expected: Vec<(BigUint, u32)> = vec![
            (BigUint::from(3u32), 3),
            (BigUint::from(7u32), 2),
            (BigUint::from(13u32), 1),
            (BigUint::from(349u32), 1),
        ];
        assert_eq!(f, expected);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(349));
        assert!(!is_prime_u64(343));
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
    }
}
