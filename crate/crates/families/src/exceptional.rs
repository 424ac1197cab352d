//! The exceptionality predicate for the fibers B_v: the minimal
//! discriminant ratio across the 7-isogeny is a 7th power times a power of
//! 7 exactly when g(v) = num(v)/den(v) lies in 7^Z (Q^x)^7, decided by
//! factoring g(v) in lowest terms and checking every prime exponent other
//! than 7 against 0 mod 7.

use crate::projq::ProjQ;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use seven_algebra::arith::{factor_biguint, FactorError};
use seven_algebra::cubics;
use seven_algebra::ring::Rationals;
use seven_algebra::Rat;

/// Is g(v) in 7^Z (Q^x)^7?  Signs are absorbed ((-1) = (-1)^7).
pub fn is_exceptional_candidate(v: &ProjQ) -> Result<bool, FactorError> {
    let q = Rationals;
    let g: Rat = match v {
        ProjQ::Infinity => return Ok(true), // g(inf) = 1
        ProjQ::Finite(v) => {
            let num = cubics::eval_num(&q, v);
            let den = cubics::eval_den(&q, v);
            &num / &den
        }
    };
    debug_assert!(!g.is_zero());
    // lowest terms
    let n: BigInt = g.numer().clone();
    let d: BigInt = g.denom().clone();
    for part in [n.abs(), d.abs()] {
        let part = part.to_biguint().unwrap();
        for (p, e) in factor_biguint(&part)? {
            if p == 7u32.into() {
                continue;
            }
            if e % 7 != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All candidates with numerator and denominator bounded by `height`
/// (plus the point at infinity), in lowest terms.
pub fn sweep_exceptional(height: i64) -> Result<Vec<ProjQ>, FactorError> {
    let mut hits = Vec::new();
    if is_exceptional_candidate(&ProjQ::Infinity)? {
        hits.push(ProjQ::Infinity);
    }
    for b in 1..=height {
        for a in -height..=height {
            if BigInt::from(a).gcd(&BigInt::from(b)) != BigInt::from(1) {
                continue;
            }
            let v = ProjQ::from_ratio(a, b);
            if is_exceptional_candidate(&v)? {
                hits.push(v);
            }
        }
    }
    hits.sort();
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_points_are_candidates() {
        for v in [
            ProjQ::from_i64(0),
            ProjQ::from_i64(1),
            ProjQ::Infinity,
            ProjQ::from_i64(2),
            ProjQ::from_ratio(1, 2),
            ProjQ::from_i64(-1),
        ] {
            assert_eq!(is_exceptional_candidate(&v), Ok(true), "{v:?}");
        }
    }

    #[test]
    fn v3_is_not_a_candidate() {
        // g(3) = 7/13: the exponent of 13 is -1, not 0 mod 7.
        assert_eq!(is_exceptional_candidate(&ProjQ::from_i64(3)), Ok(false));
    }

    #[test]
    fn small_sweep_is_exactly_the_orbit_pair() {
        let hits = sweep_exceptional(8).unwrap();
        let mut expected = vec![
            ProjQ::from_i64(0),
            ProjQ::from_i64(1),
            ProjQ::Infinity,
            ProjQ::from_i64(2),
            ProjQ::from_ratio(1, 2),
            ProjQ::from_i64(-1),
        ];
        expected.sort();
        assert_eq!(hits, expected);
    }
}
