//! The universal curve with a marked 7-torsion point:
//!
//!   E_u : y^2 - (u^2-u-1) xy - (u^3-u^2) y = x^3 - (u^3-u^2) x^2,
//!
//! with (0, 0) of order 7 on every nonsingular fiber, and
//! disc(E_u) = u^7 (u-1)^7 (u^3 - 8u^2 + 5u + 1).

use seven_algebra::poly::{Poly, PolyRing};
use seven_algebra::ring::{Rationals, Ring};
use seven_algebra::Rat;
use seven_weierstrass::model::WeierstrassModel;

pub fn build_eu<R: Ring>(ring: &R, u: &R::El) -> WeierstrassModel<R> {
    let u2 = ring.mul(u, u);
    let u3 = ring.mul(&u2, u);
    // u^2 - u - 1 and u^3 - u^2
    let q = ring.sub(&ring.sub(&u2, u), &ring.one());
    let c = ring.sub(&u3, &u2);
    WeierstrassModel::new(
        ring.clone(),
        ring.neg(&q),
        ring.neg(&c),
        ring.neg(&c),
        ring.zero(),
        ring.zero(),
    )
}

/// E_u with symbolic parameter: the coefficient ring is Q[u].
pub fn eu_generic_model() -> WeierstrassModel<PolyRing<Rationals>> {
    let pr = PolyRing::new(Rationals);
    let u = pr.var();
    build_eu(&pr, &u)
}

/// u^7 (u-1)^7 (u^3 - 8u^2 + 5u + 1), expanded.
pub fn dform_poly() -> Poly<Rat> {
    let pr = PolyRing::new(Rationals);
    let u7 = pr.pow_poly(&pr.var(), 7);
    let um1_7 = pr.pow_poly(&pr.from_i64_coeffs(&[-1, 1]), 7);
    let cubic = pr.from_i64_coeffs(&[1, 5, -8, 1]);
    pr.mul_poly(&pr.mul_poly(&u7, &um1_7), &cubic)
}

/// Coefficientwise identity disc(E_u) = dform, an exact polynomial proof.
pub fn dform_identity_holds() -> bool {
    let pr = PolyRing::new(Rationals);
    let disc = eu_generic_model().discriminant();
    pr.eq_poly(&disc, &dform_poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use seven_weierstrass::point::Point;

    #[test]
    fn discriminant_identity_coefficientwise() {
        assert!(dform_identity_holds());
    }

    #[test]
    fn degenerate_fibers() {
        let q = Rationals;
        assert!(build_eu(&q, &q.from_i64(0)).is_singular());
        assert!(build_eu(&q, &q.from_i64(1)).is_singular());
        // u = 2: disc = 2^7 * 1 * (8 - 32 + 10 + 1) = -1664.
        let m2 = build_eu(&q, &q.from_i64(2));
        assert!(q.eq_el(&m2.discriminant(), &q.from_i64(-1664)));
    }

    #[test]
    fn marked_point_has_order_seven() {
        let q = Rationals;
        let origin = Point::Affine(q.from_i64(0), q.from_i64(0));
        for u in [3i64, 2, -1, 5, -4, 7, 10, -9, 12, 15] {
            let m = build_eu(&q, &q.from_i64(u));
            assert!(!m.is_singular());
            assert!(m.contains(&origin));
            assert!(m.has_exact_prime_order(7, &origin));
        }
    }
}
