//! The rational family
//!
//!   B_v : y^2 + xy = x^3 - x^2 + alpha(v) x + beta(v),
//!
//! the specialization of the twisted family to the quintic power of the
//! cyclotomic character: disc(B_v) = -7^3 num(v) den(v)^7 identically,
//! c4(B_v) = 7 N(v) with N the product of four quadratics, the model is
//! minimal at every prime where v is integral, and for non-integral v the
//! "hat" model in w = 1/v is minimal.

use seven_algebra::cubics;
use seven_algebra::poly::{Poly, PolyRing};
use seven_algebra::ring::{Field, Rationals, Ring};
use seven_algebra::Rat;
use seven_weierstrass::isomorphism::IsoData;
use seven_weierstrass::model::WeierstrassModel;

/// Numerators/denominator pairs of alpha(v), ascending.
const ALPHA_COEFFS: [(i64, i64); 9] = [
    (-2, 1),
    (7, 4),
    (343, 24),
    (-49, 2),
    (245, 48),
    (49, 2),
    (-833, 24),
    (63, 4),
    (-35, 16),
];

const BETA_COEFFS: [(i64, i64); 13] = [
    (-1, 1),
    (14, 3),
    (-147, 16),
    (7007, 432),
    (-2009, 192),
    (-8183, 144),
    (1911, 16),
    (-1477, 36),
    (-16555, 192),
    (44149, 432),
    (-1617, 32),
    (637, 48),
    (-49, 32),
];

pub fn alpha_poly() -> Poly<Rat> {
    let q = Rationals;
    let pr = PolyRing::new(q);
    pr.poly(ALPHA_COEFFS.iter().map(|&(n, d)| q.ratio(n, d)).collect())
}

pub fn beta_poly() -> Poly<Rat> {
    let q = Rationals;
    let pr = PolyRing::new(q);
    pr.poly(BETA_COEFFS.iter().map(|&(n, d)| q.ratio(n, d)).collect())
}

fn eval_ratio_poly<F: Field>(field: &F, coeffs: &[(i64, i64)], x: &F::El) -> F::El {
    let mut acc = field.zero();
    for &(n, d) in coeffs.iter().rev() {
        acc = field.add(&field.mul(&acc, x), &field.from_ratio(n, d));
    }
    acc
}

/// B_v over any field of characteristic not 2 or 3 (the coefficient
/// denominators are 2^a 3^b).
pub fn build_bv<F: Field>(field: &F, v: &F::El) -> WeierstrassModel<F> {
    let ch = field.characteristic();
    assert!(ch != 2 && ch != 3, "coefficients have 2- and 3-power denominators");
    WeierstrassModel::new(
        field.clone(),
        field.one(),
        field.from_i64(-1),
        field.zero(),
        eval_ratio_poly(field, &ALPHA_COEFFS, v),
        eval_ratio_poly(field, &BETA_COEFFS, v),
    )
}

/// B_v with symbolic v: coefficients in Q[v].
pub fn bv_generic_model() -> WeierstrassModel<PolyRing<Rationals>> {
    let pr = PolyRing::new(Rationals);
    let v = pr.var();
    let a4 = pr.compose(&alpha_poly(), &v);
    let a6 = pr.compose(&beta_poly(), &v);
    WeierstrassModel::new(pr.clone(), pr.one(), pr.from_i64(-1), pr.zero(), a4, a6)
}

/// -7^3 num(v) den(v)^7, expanded.
pub fn delta_bv_poly() -> Poly<Rat> {
    let pr = PolyRing::new(Rationals);
    let num = cubics::num_cubic(&pr);
    let den7 = pr.pow_poly(&cubics::den_cubic(&pr), 7);
    pr.scale(&Rationals.from_i64(-343), &pr.mul_poly(&num, &den7))
}

/// The quartic-quadratic product N(v) with c4(B_v) = 7 N(v):
/// (v^2-3v-3)(v^2-v+1)(3v^2-9v+5)(5v^2-v-1).
pub fn jnum_quadratics() -> Poly<Rat> {
    let pr = PolyRing::new(Rationals);
    let qs = [
        pr.from_i64_coeffs(&[-3, -3, 1]),
        pr.from_i64_coeffs(&[1, -1, 1]),
        pr.from_i64_coeffs(&[5, -9, 3]),
        pr.from_i64_coeffs(&[-1, -1, 5]),
    ];
    let mut acc = pr.one();
    for f in &qs {
        acc = pr.mul_poly(&acc, f);
    }
    acc
}

pub fn delta_bv_identity_holds() -> bool {
    let pr = PolyRing::new(Rationals);
    pr.eq_poly(&bv_generic_model().discriminant(), &delta_bv_poly())
}

pub fn c4_bv_identity_holds() -> bool {
    let pr = PolyRing::new(Rationals);
    let c4 = bv_generic_model().invariants().c4;
    let claim = pr.scale(&Rationals.from_i64(7), &jnum_quadratics());
    pr.eq_poly(&c4, &claim)
}

/// The hat model in w = 1/v: the image of B_{1/w} under
/// x = (X + (w^4-1)/4)/w^4, y = (Y - w^4 (w^2-1)/2 x - (w^4-1)/8)/w^6,
/// integral and minimal wherever w is integral.
pub fn build_hat_bv(w: &Rat) -> WeierstrassModel<Rationals> {
    let q = Rationals;
    let v = q
        .inv(w)
        .expect("w = 0 is the fiber at infinity; use hat_bv_at_zero");
    hat_iso_image(&build_bv(&q, &v), w)
}

/// The fiber at v = infinity: substitute w = 0 into the hat coefficient
/// polynomials.
pub fn hat_bv_at_zero() -> WeierstrassModel<Rationals> {
    let q = Rationals;
    let pr = PolyRing::new(q);
    let (a4p, a6p) = hat_coefficient_polys();
    WeierstrassModel::new(
        q,
        q.one(),
        q.from_i64(-1),
        q.zero(),
        pr.eval(&a4p, &q.zero()),
        pr.eval(&a6p, &q.zero()),
    )
}

fn hat_iso_image(m: &WeierstrassModel<Rationals>, w: &Rat) -> WeierstrassModel<Rationals> {
    let q = Rationals;
    let w2 = q.mul(w, w);
    let w4 = q.mul(&w2, &w2);
    let u = q.inv(&w2).unwrap();
    let r = q.div(&q.sub(&w4, &q.one()), &q.mul(&q.from_i64(4), &w4)).unwrap();
    let s = q.neg(&q.div(&q.sub(&w2, &q.one()), &q.mul(&q.from_i64(2), &w2)).unwrap());
    let t = q.neg(&q.div(&q.sub(&w4, &q.one()), &q.mul(&q.from_i64(8), &w4)).unwrap());
    m.apply_isomorphism(&IsoData { u, r, s, t })
}

/// The two hat-model coefficient polynomials in w:
///   a4hat(w) = wrev8(alpha)(w) + (3/16)(1 - w^8),
///   a6hat(w) = wrev12(beta)(w) + ((w^4-1)/4) wrev8(alpha)(w)
///              - (2w^12 - 3w^8 + 1)/64,
/// both integer-valued on Z.
pub fn hat_coefficient_polys() -> (Poly<Rat>, Poly<Rat>) {
    let q = Rationals;
    let pr = PolyRing::new(q);
    let alpha_rev = pr.reverse(&alpha_poly(), 8);
    let beta_rev = pr.reverse(&beta_poly(), 12);
    let a4 = {
        // + 3/16 - (3/16) w^8
        let mut corr = vec![q.zero(); 9];
        corr[0] = q.ratio(3, 16);
        corr[8] = q.ratio(-3, 16);
        pr.add_poly(&alpha_rev, &pr.poly(corr))
    };
    let a6 = {
        let w4m1_over_4 = {
            let mut c = vec![q.zero(); 5];
            c[0] = q.ratio(-1, 4);
            c[4] = q.ratio(1, 4);
            pr.poly(c)
        };
        let mid = pr.mul_poly(&w4m1_over_4, &alpha_rev);
        let tail = {
            let mut c = vec![q.zero(); 13];
            c[0] = q.ratio(-1, 64);
            c[8] = q.ratio(3, 64);
            c[12] = q.ratio(-2, 64);
            pr.poly(c)
        };
        pr.add_poly(&pr.add_poly(&beta_rev, &mid), &tail)
    };
    (a4, a6)
}

/// ord_7 data of the minimal-at-7 model of B_v (the given model when v is
/// 7-integral, the hat model otherwise), as (ord disc, ord c4, ord c6).
pub fn minimal_at_7_invariant_ords(v: &Rat) -> (i64, Option<i64>, Option<i64>) {
    use seven_algebra::arith::{ord_p, PadicOrder};
    let q = Rationals;
    let integral = matches!(ord_p(v, 7), PadicOrder::Finite(k) if k >= 0) || q.is_zero(v);
    let model = if integral {
        build_bv(&q, v)
    } else {
        build_hat_bv(&q.inv(v).unwrap())
    };
    let inv = model.invariants();
    let vd = ord_p(&inv.disc, 7).expect_finite();
    let v4 = ord_p(&inv.c4, 7).finite();
    let v6 = ord_p(&inv.c6, 7).finite();
    (vd, v4, v6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use seven_algebra::arith::{ord_p, PadicOrder};
    use seven_weierstrass::minimality::{minimality_at_p, Minimality};

    #[test]
    fn delta_and_c4_identities_coefficientwise() {
        assert!(delta_bv_identity_holds());
        assert!(c4_bv_identity_holds());
    }

    #[test]
    fn alpha_beta_integer_valued() {
        let pr = PolyRing::new(Rationals);
        assert!(pr.integer_valued_on_z(&alpha_poly()));
        assert!(pr.integer_valued_on_z(&beta_poly()));
    }

    #[test]
    fn hat_model_matches_display_polynomials_and_is_integral() {
        let q = Rationals;
        let pr = PolyRing::new(q);
        let (a4p, a6p) = hat_coefficient_polys();
        // Both polynomials have degree <= 12 resp. 16; checking 20 integer
        // w-values proves the identity with the transformed model.
        for wi in 1..=20i64 {
            let w = q.from_i64(wi);
            let hat = build_hat_bv(&w);
            assert!(q.eq_el(&hat.a1, &q.one()));
            assert!(q.eq_el(&hat.a2, &q.from_i64(-1)));
            assert!(q.is_zero(&hat.a3));
            assert!(q.eq_el(&hat.a4, &pr.eval(&a4p, &w)), "a4 at w={wi}");
            assert!(q.eq_el(&hat.a6, &pr.eval(&a6p, &w)), "a6 at w={wi}");
        }
        assert!(pr.integer_valued_on_z(&a4p));
        assert!(pr.integer_valued_on_z(&a6p));
        // disc(hat B) = -7^3 den(w) num(w)^7 (the reversed pair swaps).
        let claim = {
            let den = seven_algebra::cubics::den_cubic(&pr);
            let num7 = pr.pow_poly(&seven_algebra::cubics::num_cubic(&pr), 7);
            pr.scale(&q.from_i64(-343), &pr.mul_poly(&den, &num7))
        };
        for wi in 1..=26i64 {
            let w = q.from_i64(wi);
            let hat = build_hat_bv(&w);
            assert!(q.eq_el(&hat.discriminant(), &pr.eval(&claim, &w)));
        }
    }

    #[test]
    fn named_j_values() {
        let q = Rationals;
        let m0 = build_bv(&q, &q.from_i64(0));
        assert!(q.eq_el(&m0.j_invariant().unwrap(), &q.from_i64(-3375)));
        let m2 = build_bv(&q, &q.from_i64(2));
        assert!(q.eq_el(&m2.j_invariant().unwrap(), &q.from_i64(16581375)));
        // disc(B_0) = -343.
        assert!(q.eq_el(&m0.discriminant(), &q.from_i64(-343)));
    }

    #[test]
    fn minimality_examples_at_7() {
        let q = Rationals;
        // v = 3: ord_7(disc) = 4 < 12; v = 5: ord_7(disc) = 10 < 12.
        for (v, expected_ord) in [(3i64, 4i64), (5, 10)] {
            let m = build_bv(&q, &q.from_i64(v));
            assert_eq!(
                ord_p(&m.discriminant(), 7),
                PadicOrder::Finite(expected_ord)
            );
            assert_eq!(minimality_at_p(&m, 7), Ok(Minimality::Minimal));
        }
    }

    #[test]
    fn hat_model_at_zero_is_the_infinity_fiber() {
        let q = Rationals;
        let m = hat_bv_at_zero();
        assert!(q.eq_el(&m.j_invariant().unwrap(), &q.from_i64(-3375)));
    }

    #[test]
    fn bv_over_f13() {
        // The construction works over prime fields of characteristic
        // not 2, 3; disc matches the closed form.
        let f13 = seven_algebra::ring::Fp::new(13);
        for v in 0..13u64 {
            let m = build_bv(&f13, &v);
            let num = seven_algebra::cubics::eval_num(&f13, &v);
            let den = seven_algebra::cubics::eval_den(&f13, &v);
            let claim = f13.mul(
                &f13.from_i64(-343),
                &f13.mul(&num, &f13.pow_u64(&den, 7)),
            );
            assert!(f13.eq_el(&m.discriminant(), &claim));
        }
    }
}
