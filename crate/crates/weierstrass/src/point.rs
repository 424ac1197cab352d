//! Points and the chord-tangent group law on a long Weierstrass model.

use crate::model::WeierstrassModel;
use seven_algebra::ring::Field;

#[derive(Clone, Debug)]
pub enum Point<T> {
    Infinity,
    Affine(T, T),
}

impl<T> Point<T> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&T, &T)> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, y) => Some((x, y)),
        }
    }
}

impl<F: Field> WeierstrassModel<F> {
    pub fn contains(&self, p: &Point<F::El>) -> bool {
        let r = &self.ring;
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                // y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6 = 0
                let lhs = r.add(
                    &r.mul(y, y),
                    &r.add(&r.mul(&self.a1, &r.mul(x, y)), &r.mul(&self.a3, y)),
                );
                let x2 = r.mul(x, x);
                let rhs = r.add(
                    &r.mul(&x2, x),
                    &r.add(
                        &r.mul(&self.a2, &x2),
                        &r.add(&r.mul(&self.a4, x), &self.a6),
                    ),
                );
                r.eq_el(&lhs, &rhs)
            }
        }
    }

    pub fn eq_points(&self, p: &Point<F::El>, q: &Point<F::El>) -> bool {
        let r = &self.ring;
        match (p, q) {
            (Point::Infinity, Point::Infinity) => true,
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => {
                r.eq_el(x1, x2) && r.eq_el(y1, y2)
            }
            _ => false,
        }
    }

    pub fn neg_point(&self, p: &Point<F::El>) -> Point<F::El> {
        let r = &self.ring;
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                // -(x, y) = (x, -y - a1 x - a3)
                let ny = r.neg(&r.add(y, &r.add(&r.mul(&self.a1, x), &self.a3)));
                Point::Affine(x.clone(), ny)
            }
        }
    }

    /// Chord-tangent addition.  Panics if an input is off the curve.
    pub fn add_points(&self, p: &Point<F::El>, q: &Point<F::El>) -> Point<F::El> {
        let r = &self.ring;
        debug_assert!(self.contains(p), "left summand off the curve");
        debug_assert!(self.contains(q), "right summand off the curve");
        let (x1, y1) = match p {
            Point::Infinity => return q.clone(),
            Point::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            Point::Infinity => return p.clone(),
            Point::Affine(x, y) => (x, y),
        };
        if r.eq_el(x1, x2) {
            if let Point::Affine(_, nqy) = self.neg_point(q) {
                if r.eq_el(y1, &nqy) {
                    return Point::Infinity;
                }
            }
        }
        // Slope and intercept.
        let (lambda, nu) = if r.eq_el(x1, x2) {
            // Tangent: lambda = (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3).
            let num = {
                let t = r.mul(&r.from_i64(3), &r.mul(x1, x1));
                let t = r.add(&t, &r.mul(&r.from_i64(2), &r.mul(&self.a2, x1)));
                let t = r.add(&t, &self.a4);
                r.sub(&t, &r.mul(&self.a1, y1))
            };
            let den = {
                let t = r.mul(&r.from_i64(2), y1);
                r.add(&t, &r.add(&r.mul(&self.a1, x1), &self.a3))
            };
            let lambda = r.div(&num, &den).expect("doubling a 2-torsion point already handled");
            let nu = r.sub(y1, &r.mul(&lambda, x1));
            (lambda, nu)
        } else {
            let lambda = r
                .div(&r.sub(y2, y1), &r.sub(x2, x1))
                .expect("x1 != x2");
            let nu = r.sub(y1, &r.mul(&lambda, x1));
            (lambda, nu)
        };
        // x3 = lambda^2 + a1 lambda - a2 - x1 - x2
        let x3 = {
            let t = r.add(&r.mul(&lambda, &lambda), &r.mul(&self.a1, &lambda));
            r.sub(&r.sub(&r.sub(&t, &self.a2), x1), x2)
        };
        // y3 = -(lambda + a1) x3 - nu - a3
        let y3 = {
            let t = r.mul(&r.add(&lambda, &self.a1), &x3);
            r.neg(&r.add(&t, &r.add(&nu, &self.a3)))
        };
        Point::Affine(x3, y3)
    }

    pub fn mul_point(&self, n: i64, p: &Point<F::El>) -> Point<F::El> {
        if n == 0 {
            return Point::Infinity;
        }
        let base = if n < 0 { self.neg_point(p) } else { p.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Point::Infinity;
        let mut pw = base;
        loop {
            if e & 1 == 1 {
                acc = self.add_points(&acc, &pw);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            pw = self.add_points(&pw, &pw);
        }
        acc
    }

    /// True iff p has exact order n (n a prime here suffices: p != O and
    /// n p = O).
    pub fn has_exact_prime_order(&self, n: i64, p: &Point<F::El>) -> bool {
        !p.is_infinity() && self.mul_point(n, p).is_infinity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use seven_algebra::ring::Fp;

    fn random_curve_and_points(
        p: u64,
        rng: &mut seven_algebra::rng::SplitMix64,
    ) -> Option<(WeierstrassModel<Fp>, Vec<Point<u64>>)> {
        let fp = Fp::new(p);
        let m = WeierstrassModel::from_i64(
            fp,
            [
                rng.i64_in(0, p as i64 - 1),
                rng.i64_in(0, p as i64 - 1),
                rng.i64_in(0, p as i64 - 1),
                rng.i64_in(0, p as i64 - 1),
                rng.i64_in(0, p as i64 - 1),
            ],
        );
        if m.is_singular() {
            return None;
        }
        let mut pts = vec![Point::Infinity];
        for x in 0..p {
            for y in 0..p {
                let pt = Point::Affine(x, y);
                if m.contains(&pt) {
                    pts.push(pt);
                }
            }
        }
        Some((m, pts))
    }

    #[test]
    fn group_law_axioms_randomized() {
        let mut rng = seven_algebra::rng::SplitMix64::new(41);
        let mut triples = 0;
        while triples < 200 {
            let p = [5u64, 7, 11, 13][rng.u64_below(4) as usize];
            let Some((m, pts)) = random_curve_and_points(p, &mut rng) else {
                continue;
            };
            for _ in 0..5 {
                let a = &pts[rng.u64_below(pts.len() as u64) as usize];
                let b = &pts[rng.u64_below(pts.len() as u64) as usize];
                let c = &pts[rng.u64_below(pts.len() as u64) as usize];
                // Closure.
                assert!(m.contains(&m.add_points(a, b)));
                // Associativity.
                let l = m.add_points(&m.add_points(a, b), c);
                let r = m.add_points(a, &m.add_points(b, c));
                assert!(m.eq_points(&l, &r));
                // Inverse.
                assert!(m.add_points(a, &m.neg_point(a)).is_infinity());
                triples += 1;
            }
        }
    }

    #[test]
    fn scalar_multiples_are_consistent() {
        let mut rng = seven_algebra::rng::SplitMix64::new(42);
        let (m, pts) = loop {
            if let Some(v) = random_curve_and_points(11, &mut rng) {
                break v;
            }
        };
        let p = &pts[1 % pts.len()];
        let mut acc = Point::Infinity;
        for n in 0..10i64 {
            assert!(m.eq_points(&acc, &m.mul_point(n, p)));
            acc = m.add_points(&acc, p);
        }
        assert!(m.eq_points(&m.mul_point(-3, p), &m.neg_point(&m.mul_point(3, p))));
    }
}
