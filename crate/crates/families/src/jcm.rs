//! j-invariants of the fibers B_v over P^1(Q), CM detection, and the exact
//! fiber sets hitting the two CM j-values.

use crate::bv::{delta_bv_poly, jnum_quadratics};
use crate::projq::ProjQ;
use seven_algebra::poly::PolyRing;
use seven_algebra::ring::{Field, Rationals, Ring};
use seven_algebra::Rat;

pub const CM_J_MAXIMAL: i64 = -3375; // -15^3
pub const CM_J_CONDUCTOR2: i64 = 16581375; // 255^3

/// j(B_v) = -(7 N(v))^3 / disc(B_v) = -N(v)^3 / (num(v) den(v)^7), with the
/// projective limit at infinity given by the leading coefficients.
pub fn j_bv(v: &ProjQ) -> Rat {
    let q = Rationals;
    let pr = PolyRing::new(q);
    let n = jnum_quadratics();
    match v {
        ProjQ::Finite(v) => {
            let nv = pr.eval(&n, v);
            let num = seven_algebra::cubics::eval_num(&q, v);
            let den = seven_algebra::cubics::eval_den(&q, v);
            let denom = q.mul(&num, &q.pow_u64(&den, 7));
            assert!(!q.is_zero(&denom), "degenerate fiber");
            q.neg(&q.div(&q.mul(&nv, &q.mul(&nv, &nv)), &denom).unwrap())
        }
        ProjQ::Infinity => {
            // degree(N^3) = 24 = degree(num den^7): the limit is the ratio
            // of leading coefficients.
            let lead_n = n.leading().unwrap().clone();
            let lead = q.pow_u64(&lead_n, 3);
            q.neg(&lead)
        }
    }
}

pub fn is_cm_fiber(v: &ProjQ) -> bool {
    let q = Rationals;
    let j = j_bv(v);
    q.eq_el(&j, &q.from_i64(CM_J_MAXIMAL)) || q.eq_el(&j, &q.from_i64(CM_J_CONDUCTOR2))
}

/// All v in P^1(Q) with j(B_v) = j0, by rational root extraction on
/// N(v)^3 + j0 num(v) den(v)^7 (degree 24; infinity is a solution exactly
/// when the degree drops).
pub fn fibers_with_j(j0: i64) -> Vec<ProjQ> {
    let q = Rationals;
    let pr = PolyRing::new(q);
    let n = jnum_quadratics();
    let n3 = pr.pow_poly(&n, 3);
    // num den^7 = disc / -343.
    let prod = pr.scale(&q.ratio(-1, 343), &delta_bv_poly());
    let poly = pr.add_poly(&n3, &pr.scale(&q.from_i64(j0), &prod));
    let mut out: Vec<ProjQ> = Vec::new();
    if poly.degree().map_or(true, |d| d < 24) {
        out.push(ProjQ::Infinity);
    }
    for root in pr.rational_roots(&poly).expect("factorable constants") {
        out.push(ProjQ::Finite(root));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cm_orbits_are_exact() {
        let maximal = fibers_with_j(CM_J_MAXIMAL);
        let expected: Vec<ProjQ> = {
            let mut v = vec![ProjQ::from_i64(0), ProjQ::from_i64(1), ProjQ::Infinity];
            v.sort();
            v
        };
        assert_eq!(maximal, expected);

        let nonmax = fibers_with_j(CM_J_CONDUCTOR2);
        let expected2: Vec<ProjQ> = {
            let mut v = vec![
                ProjQ::from_i64(2),
                ProjQ::from_ratio(1, 2),
                ProjQ::from_i64(-1),
            ];
            v.sort();
            v
        };
        assert_eq!(nonmax, expected2);
    }

    #[test]
    fn orbit_members_share_j() {
        let q = Rationals;
        for v in [ProjQ::from_i64(2), ProjQ::from_ratio(1, 2), ProjQ::from_i64(-1)] {
            assert!(q.eq_el(&j_bv(&v), &q.from_i64(CM_J_CONDUCTOR2)));
            assert!(is_cm_fiber(&v));
        }
        assert!(q.eq_el(&j_bv(&ProjQ::Infinity), &q.from_i64(CM_J_MAXIMAL)));
        assert!(!is_cm_fiber(&ProjQ::from_i64(3)));
    }

    #[test]
    fn j_formula_matches_model() {
        let q = Rationals;
        for vi in [-5i64, -2, 3, 4, 7, 10] {
            let v = q.from_i64(vi);
            let model = crate::bv::build_bv(&q, &v);
            assert!(q.eq_el(
                &model.j_invariant().unwrap(),
                &j_bv(&ProjQ::Finite(v.clone()))
            ));
        }
    }
}
