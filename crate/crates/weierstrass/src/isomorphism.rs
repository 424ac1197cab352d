//! Weierstrass isomorphisms (u, r, s, t): the change of variables
//! x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, and a Q-isomorphism test
//! through c4/c6 ratios.

use crate::model::WeierstrassModel;
use crate::point::Point;
use num_traits::Signed;
use seven_algebra::ring::{Field, Rationals, Ring};
use seven_algebra::Rat;

/// Data of the substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
#[derive(Clone, Debug)]
pub struct IsoData<T> {
    pub u: T,
    pub r: T,
    pub s: T,
    pub t: T,
}

impl<F: Field> WeierstrassModel<F> {
    /// The model in the primed coordinates: this model's (x, y) satisfy
    /// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.  The transformed
    /// discriminant is disc / u^12 and c4' = c4 / u^4.
    pub fn apply_isomorphism(&self, iso: &IsoData<F::El>) -> WeierstrassModel<F> {
        let k = &self.ring;
        assert!(!k.is_zero(&iso.u), "u must be nonzero");
        let ui = k.inv(&iso.u).unwrap();
        let ui2 = k.mul(&ui, &ui);
        let ui3 = k.mul(&ui2, &ui);
        let ui4 = k.mul(&ui2, &ui2);
        let ui6 = k.mul(&ui3, &ui3);
        let IsoData { r, s, t, .. } = iso;
        let two = k.from_i64(2);
        let three = k.from_i64(3);
        // a1' = (a1 + 2s)/u
        let a1 = k.mul(&k.add(&self.a1, &k.mul(&two, s)), &ui);
        // a2' = (a2 - s a1 + 3r - s^2)/u^2
        let a2 = {
            let v = k.sub(&self.a2, &k.mul(s, &self.a1));
            let v = k.add(&v, &k.mul(&three, r));
            let v = k.sub(&v, &k.mul(s, s));
            k.mul(&v, &ui2)
        };
        // a3' = (a3 + r a1 + 2t)/u^3
        let a3 = {
            let v = k.add(&self.a3, &k.mul(r, &self.a1));
            let v = k.add(&v, &k.mul(&two, t));
            k.mul(&v, &ui3)
        };
        // a4' = (a4 - s a3 + 2 r a2 - (t + r s) a1 + 3 r^2 - 2 s t)/u^4
        let a4 = {
            let v = k.sub(&self.a4, &k.mul(s, &self.a3));
            let v = k.add(&v, &k.mul(&two, &k.mul(r, &self.a2)));
            let v = k.sub(&v, &k.mul(&k.add(t, &k.mul(r, s)), &self.a1));
            let v = k.add(&v, &k.mul(&three, &k.mul(r, r)));
            let v = k.sub(&v, &k.mul(&two, &k.mul(s, t)));
            k.mul(&v, &ui4)
        };
        // a6' = (a6 + r a4 + r^2 a2 + r^3 - t a3 - t^2 - r t a1)/u^6
        let a6 = {
            let r2 = k.mul(r, r);
            let v = k.add(&self.a6, &k.mul(r, &self.a4));
            let v = k.add(&v, &k.mul(&r2, &self.a2));
            let v = k.add(&v, &k.mul(&r2, r));
            let v = k.sub(&v, &k.mul(t, &self.a3));
            let v = k.sub(&v, &k.mul(t, t));
            let v = k.sub(&v, &k.mul(r, &k.mul(t, &self.a1)));
            k.mul(&v, &ui6)
        };
        WeierstrassModel::new(k.clone(), a1, a2, a3, a4, a6)
    }

    /// Push a point of the primed model forward to this model:
    /// (x', y') |-> (u^2 x' + r, u^3 y' + s u^2 x' + t).
    pub fn iso_point_to_outer(&self, iso: &IsoData<F::El>, p: &Point<F::El>) -> Point<F::El> {
        let k = &self.ring;
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let u2 = k.mul(&iso.u, &iso.u);
                let u3 = k.mul(&u2, &iso.u);
                let nx = k.add(&k.mul(&u2, x), &iso.r);
                let ny = k.add(
                    &k.mul(&u3, y),
                    &k.add(&k.mul(&iso.s, &k.mul(&u2, x)), &iso.t),
                );
                Point::Affine(nx, ny)
            }
        }
    }

    /// Pull a point of this model back to the primed model.
    pub fn iso_point_to_inner(&self, iso: &IsoData<F::El>, p: &Point<F::El>) -> Point<F::El> {
        let k = &self.ring;
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let u2 = k.mul(&iso.u, &iso.u);
                let u3 = k.mul(&u2, &iso.u);
                let xs = k.sub(x, &iso.r);
                let nx = k.div(&xs, &u2).unwrap();
                let ny = {
                    let v = k.sub(y, &k.add(&k.mul(&iso.s, &xs), &iso.t));
                    k.div(&v, &u3).unwrap()
                };
                Point::Affine(nx, ny)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QIsoError {
    /// j in {0, 1728}: the ratio test is inconclusive there (extra
    /// automorphisms); flagged rather than silently answered.
    SpecialJ,
    DifferentJ,
    Singular,
}

impl std::fmt::Display for QIsoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QIsoError::SpecialJ => write!(f, "j in {{0, 1728}}: ratio test inconclusive"),
            QIsoError::DifferentJ => write!(f, "different j-invariants"),
            QIsoError::Singular => write!(f, "singular model"),
        }
    }
}

impl std::error::Error for QIsoError {}

/// Decide whether two nonsingular models over Q with equal j (j not 0 or
/// 1728) are isomorphic over Q: u^4 = c4/c4' and u^6 = c6/c6' must come
/// from a rational u, i.e. (c6 ratio)/(c4 ratio) must be a rational square.
pub fn q_isomorphic(
    m1: &WeierstrassModel<Rationals>,
    m2: &WeierstrassModel<Rationals>,
) -> Result<bool, QIsoError> {
    let q = Rationals;
    let i1 = m1.invariants();
    let i2 = m2.invariants();
    if q.is_zero(&i1.disc) || q.is_zero(&i2.disc) {
        return Err(QIsoError::Singular);
    }
    let j1 = m1.j_invariant().unwrap();
    let j2 = m2.j_invariant().unwrap();
    if !q.eq_el(&j1, &j2) {
        return Err(QIsoError::DifferentJ);
    }
    if q.is_zero(&i1.c4) || q.is_zero(&i1.c6) {
        return Err(QIsoError::SpecialJ);
    }
    let r4 = q.div(&i1.c4, &i2.c4).unwrap(); // u^4
    let r6 = q.div(&i1.c6, &i2.c6).unwrap(); // u^6
    // Consistency (automatic when j matches): r4^3 = r6^2.
    let lhs = q.mul(&r4, &q.mul(&r4, &r4));
    let rhs = q.mul(&r6, &r6);
    if !q.eq_el(&lhs, &rhs) {
        return Ok(false);
    }
    // u^2 = r6/r4 must be the square of a rational.
    let u2 = q.div(&r6, &r4).unwrap();
    Ok(is_rational_square(&u2))
}

fn is_rational_square(x: &Rat) -> bool {
    if x.is_negative() {
        return false;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    &(&n * &n) == x.numer() && &(&d * &d) == x.denom()
}

#[cfg(test)]
mod tests {
    use super::*;
    use seven_algebra::ring::Fp;

    #[test]
    fn identity_isomorphism_fixes_model() {
        let q = Rationals;
        let m = WeierstrassModel::from_i64(q, [1, 2, 3, 4, 5]);
        let iso = IsoData {
            u: q.from_i64(1),
            r: q.from_i64(0),
            s: q.from_i64(0),
            t: q.from_i64(0),
        };
        let m2 = m.apply_isomorphism(&iso);
        assert!(q.eq_el(&m.a1, &m2.a1));
        assert!(q.eq_el(&m.a6, &m2.a6));
    }

    #[test]
    fn isomorphism_preserves_j_and_scales_disc() {
        let q = Rationals;
        let m = WeierstrassModel::from_i64(q, [1, -1, 1, -10, -20]);
        let iso = IsoData {
            u: q.from_i64(2),
            r: q.from_i64(3),
            s: q.from_i64(-1),
            t: q.from_i64(5),
        };
        let m2 = m.apply_isomorphism(&iso);
        assert!(q.eq_el(&m.j_invariant().unwrap(), &m2.j_invariant().unwrap()));
        let u12 = q.pow_u64(&q.from_i64(2), 12);
        assert!(q.eq_el(&m.discriminant(), &q.mul(&m2.discriminant(), &u12)));
    }

    #[test]
    fn point_maps_roundtrip_and_respect_addition() {
        let f13 = Fp::new(13);
        let m = WeierstrassModel::from_i64(f13, [1, 0, 1, 4, 6]);
        assert!(!m.is_singular());
        let iso = IsoData {
            u: 2u64,
            r: 5u64,
            s: 7u64,
            t: 1u64,
        };
        let m2 = m.apply_isomorphism(&iso);
        // Walk the inner curve's points through the forward map.
        let mut checked = 0;
        for x in 0..13u64 {
            for y in 0..13u64 {
                let p = Point::Affine(x, y);
                if m2.contains(&p) {
                    let img = m.iso_point_to_outer(&iso, &p);
                    assert!(m.contains(&img));
                    let back = m.iso_point_to_inner(&iso, &img);
                    assert!(m2.eq_points(&back, &p));
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn twist_by_square_is_q_isomorphic() {
        let q = Rationals;
        let m = WeierstrassModel::from_i64(q, [0, 0, 0, -4, 4]);
        let t9 = m.quadratic_twist(&q.from_i64(9));
        assert_eq!(q_isomorphic(&m, &t9), Ok(true));
        let t3 = m.quadratic_twist(&q.from_i64(3));
        assert_eq!(q_isomorphic(&m, &t3), Ok(false));
        // Double twist: isomorphic to the single trivial twist.
        let t3_3 = t3.quadratic_twist(&q.from_i64(3));
        assert_eq!(q_isomorphic(&m, &t3_3), Ok(true));
    }
}
