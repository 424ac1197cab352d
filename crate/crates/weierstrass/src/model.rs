//! The long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
//! and its standard invariants.

use seven_algebra::ring::{Field, Ring};

#[derive(Clone, Debug)]
pub struct WeierstrassModel<R: Ring> {
    pub ring: R,
    pub a1: R::El,
    pub a2: R::El,
    pub a3: R::El,
    pub a4: R::El,
    pub a6: R::El,
}

#[derive(Clone, Debug)]
pub struct Invariants<T> {
    pub b2: T,
    pub b4: T,
    pub b6: T,
    pub b8: T,
    pub c4: T,
    pub c6: T,
    pub disc: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// j is undefined on a singular model (disc = 0).
    SingularModel,
}

impl std::fmt::Display for ModelError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelError::SingularModel => write!(f, "singular model: discriminant is zero"),
        }
    }
}

impl std::error::Error for ModelError {}

impl<R: Ring> WeierstrassModel<R> {
    pub fn new(ring: R, a1: R::El, a2: R::El, a3: R::El, a4: R::El, a6: R::El) -> Self {
        WeierstrassModel {
            ring,
            a1,
            a2,
            a3,
            a4,
            a6,
        }
    }

    pub fn from_i64(ring: R, a: [i64; 5]) -> Self {
        WeierstrassModel {
            a1: ring.from_i64(a[0]),
            a2: ring.from_i64(a[1]),
            a3: ring.from_i64(a[2]),
            a4: ring.from_i64(a[3]),
            a6: ring.from_i64(a[4]),
            ring,
        }
    }

    /// Short form y^2 = x^3 + a4 x + a6 or with a2.
    pub fn short(ring: R, a2: R::El, a4: R::El, a6: R::El) -> Self {
        WeierstrassModel {
            a1: ring.zero(),
            a3: ring.zero(),
            ring,
            a2,
            a4,
            a6,
        }
    }

    pub fn invariants(&self) -> Invariants<R::El> {
        let r = &self.ring;
        let two = r.from_i64(2);
        let three = r.from_i64(3);
        let four = r.from_i64(4);
        let b2 = r.add(&r.mul(&self.a1, &self.a1), &r.mul(&four, &self.a2));
        let b4 = r.add(&r.mul(&two, &self.a4), &r.mul(&self.a1, &self.a3));
        let b6 = r.add(&r.mul(&self.a3, &self.a3), &r.mul(&four, &self.a6));
        // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
        let b8 = {
            let t1 = r.mul(&r.mul(&self.a1, &self.a1), &self.a6);
            let t2 = r.mul(&four, &r.mul(&self.a2, &self.a6));
            let t3 = r.mul(&self.a1, &r.mul(&self.a3, &self.a4));
            let t4 = r.mul(&self.a2, &r.mul(&self.a3, &self.a3));
            let t5 = r.mul(&self.a4, &self.a4);
            r.sub(&r.add(&r.sub(&r.add(&t1, &t2), &t3), &t4), &t5)
        };
        let c4 = r.sub(&r.mul(&b2, &b2), &r.mul(&r.from_i64(24), &b4));
        let c6 = {
            let t1 = r.mul(&b2, &r.mul(&b2, &b2));
            let t2 = r.mul(&r.from_i64(36), &r.mul(&b2, &b4));
            let t3 = r.mul(&r.from_i64(216), &b6);
            r.sub(&r.add(&r.neg(&t1), &t2), &t3)
        };
        // disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        let disc = {
            let t1 = r.mul(&r.mul(&b2, &b2), &b8);
            let t2 = r.mul(&r.from_i64(8), &r.mul(&b4, &r.mul(&b4, &b4)));
            let t3 = r.mul(&r.from_i64(27), &r.mul(&b6, &b6));
            let t4 = r.mul(&r.from_i64(9), &r.mul(&b2, &r.mul(&b4, &b6)));
            r.add(&r.neg(&r.add(&r.add(&t1, &t2), &t3)), &t4)
        };
        let _ = three;
        Invariants {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
        }
    }

    pub fn discriminant(&self) -> R::El {
        self.invariants().disc
    }

    pub fn is_singular(&self) -> bool {
        self.ring.is_zero(&self.discriminant())
    }
}

impl<F: Field> WeierstrassModel<F> {
    pub fn j_invariant(&self) -> Result<F::El, ModelError> {
        let inv = self.invariants();
        if self.ring.is_zero(&inv.disc) {
            return Err(ModelError::SingularModel);
        }
        let c43 = self.ring.mul(&inv.c4, &self.ring.mul(&inv.c4, &inv.c4));
        Ok(self
            .ring
            .div(&c43, &inv.disc)
            .expect("nonzero discriminant"))
    }

    /// The quadratic twist by d (char != 2, d != 0):
    /// y^2 = x^3 + d b2 x^2 + 8 d^2 b4 x + 16 d^3 b6.
    pub fn quadratic_twist(&self, d: &F::El) -> WeierstrassModel<F> {
        let r = &self.ring;
        assert!(r.characteristic() != 2, "twist formula needs char != 2");
        assert!(!r.is_zero(d), "twist by zero rejected");
        let inv = self.invariants();
        let d2 = r.mul(d, d);
        let d3 = r.mul(&d2, d);
        WeierstrassModel::short(
            r.clone(),
            r.mul(d, &inv.b2),
            r.mul(&r.from_i64(8), &r.mul(&d2, &inv.b4)),
            r.mul(&r.from_i64(16), &r.mul(&d3, &inv.b6)),
        )
    }
}
