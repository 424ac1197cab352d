//! Quotient rings F[x]/(m) for a monic modulus over a field.
//!
//! The context is generically treated as a field (`inv` via extended gcd);
//! when the modulus is reducible, `try_inv` reports the nontrivial factor
//! it found instead of an inverse.

use crate::poly::{Poly, PolyRing};
use crate::ring::{Field, Ring};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct QuotientRing<F: Field> {
    base: F,
    poly_ring: PolyRing<F>,
    modulus: Arc<Poly<F::El>>,
}

impl<F: Field> QuotientRing<F> {
    /// Builds F[x]/(m).  The modulus is normalized to be monic.
    pub fn new(base: F, modulus: Poly<F::El>) -> Self {
        let poly_ring = PolyRing::new(base.clone());
        assert!(
            modulus.degree().map_or(false, |d| d >= 1),
            "modulus must have degree >= 1"
        );
        let modulus = poly_ring.monic(&modulus);
        QuotientRing {
            base,
            poly_ring,
            modulus: Arc::new(modulus),
        }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<F::El> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.poly_ring
    }

    /// The class of x.
    pub fn generator(&self) -> Poly<F::El> {
        self.reduce(self.poly_ring.var())
    }

    pub fn from_base(&self, c: F::El) -> Poly<F::El> {
        self.poly_ring.constant(c)
    }

    pub fn from_poly(&self, f: Poly<F::El>) -> Poly<F::El> {
        self.reduce(f)
    }

    fn reduce(&self, f: Poly<F::El>) -> Poly<F::El> {
        if f.degree().map_or(true, |d| d < self.degree()) {
            return f;
        }
        self.poly_ring.rem(&f, &self.modulus).unwrap()
    }

    /// Inverse, or the nontrivial factor of the modulus exposed by a
    /// non-invertible element.
    pub fn try_inv(&self, a: &Poly<F::El>) -> Result<Poly<F::El>, Poly<F::El>> {
        if a.is_zero_poly() {
            return Err(self.modulus.as_ref().clone());
        }
        let (g, s, _) = self.poly_ring.xgcd(a, &self.modulus);
        if g.degree() == Some(0) {
            Ok(self.reduce(s))
        } else {
            Err(g)
        }
    }

    /// Evaluate the representative of `a` at an arbitrary element `x` of a
    /// target ring; when `x` is a root of the modulus this is the induced
    /// ring homomorphism.
    pub fn eval_rep_in<S: Ring>(
        &self,
        a: &Poly<F::El>,
        target: &S,
        embed: impl Fn(&F::El) -> S::El,
        x: &S::El,
    ) -> S::El {
        self.poly_ring.eval_in(a, target, embed, x)
    }

    /// The coefficient of x^i in the reduced representative.
    pub fn rep_coeff(&self, a: &Poly<F::El>, i: usize) -> F::El {
        self.poly_ring.coeff(a, i)
    }
}

impl<F: Field> Ring for QuotientRing<F> {
    type El = Poly<F::El>;

    fn zero(&self) -> Poly<F::El> {
        self.poly_ring.zero()
    }
    fn one(&self) -> Poly<F::El> {
        self.poly_ring.one()
    }
    fn from_i64(&self, n: i64) -> Poly<F::El> {
        self.poly_ring.from_i64(n)
    }
    fn add(&self, a: &Poly<F::El>, b: &Poly<F::El>) -> Poly<F::El> {
        self.poly_ring.add_poly(a, b)
    }
    fn neg(&self, a: &Poly<F::El>) -> Poly<F::El> {
        self.poly_ring.neg_poly(a)
    }
    fn mul(&self, a: &Poly<F::El>, b: &Poly<F::El>) -> Poly<F::El> {
        self.reduce(self.poly_ring.mul_poly(a, b))
    }
    fn eq_el(&self, a: &Poly<F::El>, b: &Poly<F::El>) -> bool {
        self.poly_ring.eq_poly(a, b)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn fmt_el(&self, a: &Poly<F::El>) -> String {
        self.poly_ring.fmt_el(a)
    }
}

impl<F: Field> Field for QuotientRing<F> {
    fn inv(&self, a: &Poly<F::El>) -> Option<Poly<F::El>> {
        self.try_inv(a).ok()
    }
}
