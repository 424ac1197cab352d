//! The reversed pair of cubics whose ratio defines the degree-7 cyclic cover
//! studied by this workspace:
//!
//!   num(v) = v^3 - 2v^2 - v + 1,    den(v) = v^3 - v^2 - 2v + 1.
//!
//! They are reverses of each other (v^3 * num(1/v) = den(v)), each has
//! discriminant 49, their resultant is 7, and num(1 - v) = -den(v).
//! Coefficients are listed ascending.

use crate::poly::{Poly, PolyRing};
use crate::ring::Ring;

/// v^3 - 2v^2 - v + 1 (numerator cubic).
pub const NUM_CUBIC: [i64; 4] = [1, -1, -2, 1];

/// v^3 - v^2 - 2v + 1 (denominator cubic).
pub const DEN_CUBIC: [i64; 4] = [1, -2, -1, 1];

pub fn num_cubic<R: Ring>(ring: &PolyRing<R>) -> Poly<R::El> {
    ring.from_i64_coeffs(&NUM_CUBIC)
}

pub fn den_cubic<R: Ring>(ring: &PolyRing<R>) -> Poly<R::El> {
    ring.from_i64_coeffs(&DEN_CUBIC)
}

/// num(x) evaluated by Horner directly in the ring.
pub fn eval_num<R: Ring>(ring: &R, x: &R::El) -> R::El {
    eval_cubic(ring, &NUM_CUBIC, x)
}

/// den(x) evaluated by Horner directly in the ring.
pub fn eval_den<R: Ring>(ring: &R, x: &R::El) -> R::El {
    eval_cubic(ring, &DEN_CUBIC, x)
}

fn eval_cubic<R: Ring>(ring: &R, coeffs: &[i64; 4], x: &R::El) -> R::El {
    let mut acc = ring.zero();
    for &c in coeffs.iter().rev() {
        acc = ring.add(&ring.mul(&acc, x), &ring.from_i64(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Rationals};

    #[test]
    fn reversal_and_reflection_identities() {
        let r = PolyRing::new(Rationals);
        let f1 = num_cubic(&r);
        let f2 = den_cubic(&r);
        assert!(r.eq_poly(&r.reverse(&f1, 3), &f2));
        // num(1 - v) = -den(v).
        let one_minus_v = r.from_i64_coeffs(&[1, -1]);
        let lhs = r.compose(&f1, &one_minus_v);
        assert!(r.eq_poly(&lhs, &r.neg_poly(&f2)));
    }

    #[test]
    fn small_values() {
        let q = Rationals;
        assert!(q.eq_el(&eval_num(&q, &q.from_i64(3)), &q.from_i64(7)));
        assert!(q.eq_el(&eval_num(&q, &q.from_i64(-1)), &q.from_i64(-1)));
        assert!(q.eq_el(&eval_den(&q, &q.from_i64(-1)), &q.from_i64(1)));
        assert!(q.eq_el(&eval_den(&q, &q.from_i64(0)), &q.from_i64(1)));
    }
}
