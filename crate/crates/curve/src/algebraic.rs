//! Membership of closed points given by algebraic data: w a root of a
//! minimal polynomial m(t), v a polynomial expression in w; the point lies
//! on the curve iff w^7 den(v) - num(v) = 0 in Q[t]/(m).

use seven_algebra::cubics;
use seven_algebra::poly::{Poly, PolyRing};
use seven_algebra::quotient::QuotientRing;
use seven_algebra::ring::{Rationals, Ring};
use seven_algebra::Rat;

#[derive(Clone, Debug)]
pub struct AlgebraicPoint {
    /// Minimal polynomial of w, ascending coefficients.
    pub minpoly: Vec<i64>,
    /// v = vnum(w)/vden.
    pub vnum: Vec<i64>,
    pub vden: i64,
}

impl AlgebraicPoint {
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// The residue w^7 den(v) - num(v) reduced mod the minimal polynomial
    /// (zero exactly when the point is on the curve).
    pub fn curve_residue(&self) -> Poly<Rat> {
        let q = Rationals;
        let pr = PolyRing::new(q);
        let ring = QuotientRing::new(q, pr.from_i64_coeffs(&self.minpoly));
        let w = ring.generator();
        let v = {
            let num = ring.from_poly(pr.from_i64_coeffs(&self.vnum));
            let den = ring.from_base(q.from_i64(self.vden));
            ring.mul(&num, &ring.try_inv(&den).expect("nonzero denominator"))
        };
        let num_v = cubics::eval_num(&ring, &v);
        let den_v = cubics::eval_den(&ring, &v);
        let w7 = ring.pow_u64(&w, 7);
        ring.sub(&ring.mul(&w7, &den_v), &num_v)
    }

    pub fn is_on_curve(&self) -> bool {
        self.curve_residue().is_zero_poly()
    }
}

#[cfg(test)]
mod tests {
    use crate::data;

    #[test]
    fn published_degree_8_and_16_points_lie_on_the_curve() {
        let dir = data::default_data_dir();
        let p8 = data::load_algebraic_point(&dir.join("algebraic_point_deg8.txt")).unwrap();
        assert_eq!(p8.degree(), 8);
        assert!(p8.is_on_curve());
        let p16 = data::load_algebraic_point(&dir.join("algebraic_point_deg16.txt")).unwrap();
        assert_eq!(p16.degree(), 16);
        assert!(p16.is_on_curve());
    }

    #[test]
    fn perturbed_point_fails() {
        let dir = data::default_data_dir();
        let mut p8 = data::load_algebraic_point(&dir.join("algebraic_point_deg8.txt")).unwrap();
        // negative control: shift the v-expression by +1.
        p8.vnum[0] += p8.vden;
        assert!(!p8.is_on_curve());
    }
}
