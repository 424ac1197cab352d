//! The cyclotomic instance of the cyclic-cubic parametrization: inside
//! Q(zeta_7), the element gamma = -(zeta + zeta^-1) satisfies
//! x^3 - x^2 - 2x + 1 = 0 (the t = -2 member of the family
//! x^3 - (t+3)x^2 + tx + 1), the Galois substitution zeta -> zeta^2 sends
//! gamma to 1/(1 - gamma), and the two cubics split completely:
//! 1 + zeta^i + zeta^-i are the roots of the numerator cubic and
//! -(zeta^i + zeta^-i) the roots of the denominator cubic.

use seven_algebra::poly::PolyRing;
use seven_algebra::quotient::QuotientRing;
use seven_algebra::ring::{Rationals, Ring};

pub type Cyclotomic7 = QuotientRing<Rationals>;

/// Q[z]/(z^6 + z^5 + ... + 1).
pub fn cyclotomic_field() -> Cyclotomic7 {
    let q = Rationals;
    let pr = PolyRing::new(q);
    QuotientRing::new(q, pr.from_i64_coeffs(&[1, 1, 1, 1, 1, 1, 1]))
}

pub struct LcwInstance {
    pub field: Cyclotomic7,
    /// gamma = -(zeta + zeta^-1).
    pub gamma: <Cyclotomic7 as Ring>::El,
}

pub fn lcw_cyclotomic_instance() -> LcwInstance {
    let kf = cyclotomic_field();
    let z = kf.generator();
    let zinv = kf.pow_u64(&z, 6);
    let gamma = kf.neg(&kf.add(&z, &zinv));
    LcwInstance { field: kf, gamma }
}

/// The substitution zeta -> zeta^a (a ring automorphism for 7-coprime a).
pub fn galois_zeta(kf: &Cyclotomic7, a: u64, x: &<Cyclotomic7 as Ring>::El) -> <Cyclotomic7 as Ring>::El {
    let za = kf.pow_u64(&kf.generator(), a % 7);
    kf.eval_rep_in(x, kf, |c| kf.from_base(c.clone()), &za)
}

#[cfg(test)]
mod tests {
    use super::*;
    use seven_algebra::cubics;
    use seven_algebra::ring::Field;

    #[test]
    fn gamma_is_a_root_of_the_denominator_cubic() {
        let inst = lcw_cyclotomic_instance();
        let kf = &inst.field;
        let pr = PolyRing::new(kf.clone());
        let den = cubics::den_cubic(&pr);
        let val = pr.eval(&den, &inst.gamma);
        assert!(kf.is_zero(&val));
    }

    #[test]
    fn zeta_squared_sends_gamma_to_eta_of_gamma() {
        let inst = lcw_cyclotomic_instance();
        let kf = &inst.field;
        let sg = galois_zeta(kf, 2, &inst.gamma);
        let eta_gamma = kf
            .inv(&kf.sub(&kf.one(), &inst.gamma))
            .expect("1 - gamma is a unit");
        assert!(kf.eq_el(&sg, &eta_gamma));
    }

    #[test]
    fn both_cubics_split_with_the_stated_roots() {
        let inst = lcw_cyclotomic_instance();
        let kf = &inst.field;
        let pr = PolyRing::new(kf.clone());
        let num = cubics::num_cubic(&pr);
        let den = cubics::den_cubic(&pr);
        let z = kf.generator();
        for i in 1..=3u64 {
            let zi = kf.pow_u64(&z, i);
            let zmi = kf.pow_u64(&z, 7 - i);
            let s = kf.add(&zi, &zmi);
            let num_root = kf.add(&kf.one(), &s);
            let den_root = kf.neg(&s);
            assert!(kf.is_zero(&pr.eval(&num, &num_root)), "numerator root {i}");
            assert!(kf.is_zero(&pr.eval(&den, &den_root)), "denominator root {i}");
        }
    }
}
