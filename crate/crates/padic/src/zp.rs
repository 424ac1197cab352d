//! Plain p-adic integers: a residue mod p^N with tracked precision N.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

/// Element of Z_p known to N digits: a residue in Z/p^N.  Arithmetic results
/// carry the minimum of the input precisions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicInt {
    p: u64,
    digits: usize,
    residue: BigUint,
}

impl PadicInt {
    pub fn new(p: u64, digits: usize, value: &BigInt) -> Self {
        assert!(seven_algebra::arith::is_prime_u64(p));
        assert!(digits >= 1);
        let m = BigInt::from(BigUint::from(p).pow(digits as u32));
        let mut r = value % &m;
        if r.is_negative() {
            r += &m;
        }
        PadicInt {
            p,
            digits,
            residue: r.to_biguint().unwrap(),
        }
    }

    pub fn from_u64(p: u64, digits: usize, value: u64) -> Self {
        Self::new(p, digits, &BigInt::from(value))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.digits as u32)
    }

    fn align(&self, rhs: &Self) -> (BigUint, usize) {
        assert_eq!(self.p, rhs.p, "mixed primes");
        let digits = self.digits.min(rhs.digits);
        (BigUint::from(self.p).pow(digits as u32), digits)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (m, digits) = self.align(rhs);
        PadicInt {
            p: self.p,
            digits,
            residue: (&self.residue + &rhs.residue) % m,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let (m, digits) = self.align(rhs);
        let r = (&self.residue % &m) + &m - (&rhs.residue % &m);
        PadicInt {
            p: self.p,
            digits,
            residue: r % m,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (m, digits) = self.align(rhs);
        PadicInt {
            p: self.p,
            digits,
            residue: (&self.residue * &rhs.residue) % m,
        }
    }

    /// p-adic valuation, capped by the precision: `None` means the value is
    /// zero to the known digits.
    pub fn val(&self) -> Option<usize> {
        if self.residue.is_zero() {
            return None;
        }
        let p = BigUint::from(self.p);
        let mut v = 0usize;
        let mut r = self.residue.clone();
        while (&r % &p).is_zero() {
            r /= &p;
            v += 1;
        }
        Some(v)
    }

    /// Inverse of a unit (valuation zero).
    pub fn inv(&self) -> Option<Self> {
        self.val().filter(|&v| v == 0)?;
        let m = self.modulus();
        // Hensel lift of the inverse mod p.
        let p = BigUint::from(self.p);
        let r0 = (&self.residue % &p).to_u64().unwrap();
        let mut z = BigUint::from(mod_inverse_u64(r0, self.p));
        let two = BigUint::from(2u32);
        let steps = (usize::BITS - self.digits.leading_zeros()) as usize + 2;
        for _ in 0..steps {
            let az = (&self.residue * &z) % &m;
            let lin = ((&two + &m - az) % &m) * &z;
            z = lin % &m;
        }
        Some(PadicInt {
            p: self.p,
            digits: self.digits,
            residue: z,
        })
    }

    /// Canonical digit expansion, least significant first.
    pub fn digit_expansion(&self) -> Vec<u64> {
        let p = BigUint::from(self.p);
        let mut out = Vec::with_capacity(self.digits);
        let mut r = self.residue.clone();
        for _ in 0..self.digits {
            out.push((&r % &p).to_u64().unwrap());
            r /= &p;
        }
        out
    }

    /// The Teichmueller representative congruent to this unit mod p.
    pub fn teichmueller(&self) -> Self {
        let m = self.modulus();
        let mut x = self.residue.clone() % &m;
        for _ in 0..=self.digits {
            x = x.modpow(&BigUint::from(self.p), &m);
        }
        PadicInt {
            p: self.p,
            digits: self.digits,
            residue: x,
        }
    }
}

impl std::fmt::Display for PadicInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits = self.digit_expansion();
        write!(
            f,
            "{} + O({}^{})",
            digits
                .iter()
                .enumerate()
                .filter(|(_, d)| **d != 0)
                .map(|(i, d)| match i {
                    0 => format!("{d}"),
                    1 => format!("{d}*{}", self.p),
                    _ => format!("{d}*{}^{}", self.p, i),
                })
                .collect::<Vec<_>>()
                .join(" + "),
            self.p,
            self.digits
        )
    }
}

fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    // p prime, a a unit.
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_is_min_of_inputs() {
        let a = PadicInt::from_u64(7, 10, 3);
        let b = PadicInt::from_u64(7, 6, 5);
        assert_eq!(a.mul(&b).digits(), 6);
        assert_eq!(a.add(&b).digits(), 6);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = PadicInt::from_u64(7, 12, 3 + 7 * 5 + 49 * 2);
        let inv = a.inv().unwrap();
        let prod = a.mul(&inv);
        assert!(prod.sub(&PadicInt::from_u64(7, 12, 1)).residue().is_zero());
        assert!(PadicInt::from_u64(7, 12, 14).inv().is_none());
    }

    #[test]
    fn teichmueller_is_root_of_unity() {
        for r in 1..7u64 {
            let t = PadicInt::from_u64(7, 15, r).teichmueller();
            let t6 = t.mul(&t).mul(&t).mul(&t).mul(&t).mul(&t);
            assert!(t6.sub(&PadicInt::from_u64(7, 15, 1)).residue().is_zero());
            assert_eq!(t.digit_expansion()[0], r);
        }
    }

    #[test]
    fn valuation() {
        assert_eq!(PadicInt::from_u64(7, 8, 98).val(), Some(2));
        assert_eq!(PadicInt::from_u64(7, 8, 0).val(), None);
    }
}
