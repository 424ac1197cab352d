//! The rational 7-isogeny out of B_v: its kernel polynomial is assembled
//! from the marked torsion point of the twisted family over the cubic field
//! (t = -2), transported through the twist by -1/7 and the explicit
//! isomorphism onto B_v; the quotient curve is Q-isomorphic to the twist of
//! B_{1-v} by -7.

use crate::av::{cubic_field, marked_av, CubicField};
use crate::bv::build_bv;
use seven_algebra::poly::{Poly, PolyRing};
use seven_algebra::quotient::QuotientRing;
use seven_algebra::ring::{Rationals, Ring};
use seven_algebra::Rat;
use seven_weierstrass::isomorphism::{q_isomorphic, QIsoError};
use seven_weierstrass::point::Point;
use seven_weierstrass::velu::{velu_isogeny, Isogeny, VeluError};

#[derive(Clone, Debug)]
pub enum BvIsogenyError {
    DegenerateFiber,
    KernelConstruction(String),
    Velu(VeluError),
}

impl std::fmt::Display for BvIsogenyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BvIsogenyError::DegenerateFiber => write!(f, "degenerate fiber"),
            BvIsogenyError::KernelConstruction(s) => write!(f, "kernel construction failed: {s}"),
            BvIsogenyError::Velu(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BvIsogenyError {}

/// x-coordinate shift of the map from the twisted family onto B_v:
/// s(v) = (3/4)v^4 - (5/6)v^3 - (15/4)v^2 + (23/6)v - 1.
fn shift_poly() -> Poly<Rat> {
    let q = Rationals;
    let pr = PolyRing::new(q);
    pr.poly(vec![
        q.from_i64(-1),
        q.ratio(23, 6),
        q.ratio(-15, 4),
        q.ratio(-5, 6),
        q.ratio(3, 4),
    ])
}

/// Monic cubic whose roots are the x-coordinates of the nonzero points of
/// the rational order-7 kernel of B_v.
pub fn bv_kernel_polynomial(v: &Rat) -> Result<Poly<Rat>, BvIsogenyError> {
    let q = Rationals;
    let t = q.from_i64(-2);
    let marked = marked_av(&t, v);
    if marked.model.is_singular() {
        return Err(BvIsogenyError::DegenerateFiber);
    }
    let kf: &CubicField = &marked.field;
    // x_B([i]P) = -x_A([i]P)/7 + s(v) for i = 1, 2, 3.
    let pr = PolyRing::new(q);
    let shift = pr.eval(&shift_poly(), v);
    let d = q.ratio(-1, 7);
    let kf_pr = PolyRing::new(kf.clone());
    let mut kernel_k = kf_pr.one();
    for i in 1..=3i64 {
        let multiple = marked.model.mul_point(i, &marked.point);
        let (xa, _) = match &multiple {
            Point::Affine(x, y) => (x, y),
            Point::Infinity => {
                return Err(BvIsogenyError::KernelConstruction(
                    "kernel point collapsed to infinity".to_string(),
                ))
            }
        };
        let xb = kf.add(
            &kf.mul(&kf.from_base(d.clone()), xa),
            &kf.from_base(shift.clone()),
        );
        kernel_k = kf_pr.mul_poly(&kernel_k, &kf_pr.poly(vec![kf.neg(&xb), kf.one()]));
    }
    // Galois-stable subgroup: the coefficients must be rational.
    let mut out = Vec::with_capacity(4);
    for i in 0..=3usize {
        let c = kf_pr.coeff(&kernel_k, i);
        for j in 1..3 {
            if !q.is_zero(&kf.rep_coeff(&c, j)) {
                return Err(BvIsogenyError::KernelConstruction(format!(
                    "kernel coefficient {i} has a gamma^{j} component"
                )));
            }
        }
        out.push(kf.rep_coeff(&c, 0));
    }
    Ok(pr.poly(out))
}

/// The degree-7 isogeny out of B_v.
pub fn bv_seven_isogeny(v: &Rat) -> Result<Isogeny<Rationals>, BvIsogenyError> {
    let q = Rationals;
    let model = build_bv(&q, v);
    if model.is_singular() {
        return Err(BvIsogenyError::DegenerateFiber);
    }
    let kernel = bv_kernel_polynomial(v)?;
    velu_isogeny(&model, &kernel).map_err(BvIsogenyError::Velu)
}

/// The codomain of the 7-isogeny must be Q-isomorphic to the quadratic
/// twist of B_{1-v} by -7.  Returns the comparison verdict.
pub fn isogenous_twist_verdict(v: &Rat) -> Result<Result<bool, QIsoError>, BvIsogenyError> {
    let q = Rationals;
    let iso = bv_seven_isogeny(v)?;
    let one_minus_v = q.sub(&q.one(), v);
    let target = build_bv(&q, &one_minus_v).quadratic_twist(&q.from_i64(-7));
    Ok(q_isomorphic(&iso.codomain, &target))
}

/// Keep the cubic-field constructor reachable for callers that only need
/// the Galois-side data.
pub fn kernel_field() -> CubicField {
    cubic_field(&Rationals.from_i64(-2))
}

pub type KernelField = QuotientRing<Rationals>;
