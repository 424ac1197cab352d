//! Degree-7 isogenies from a rational kernel polynomial, by Velu's
//! formulas: codomain coefficients from the power sums of the kernel
//! x-coordinates, the x-map as a rational function with denominator h^2,
//! and the y-map through the normalized invariant differential.

use crate::model::WeierstrassModel;
use crate::point::Point;
use seven_algebra::poly::{Poly, PolyRing};
use seven_algebra::ring::{Field, Ring};

#[derive(Clone, Debug)]
pub struct Isogeny<F: Field> {
    pub domain: WeierstrassModel<F>,
    pub codomain: WeierstrassModel<F>,
    /// Monic cubic vanishing on the kernel x-coordinates.
    pub kernel: Poly<F::El>,
    /// x-map numerator: X = x_num / kernel^2, degree 7.
    pub x_num: Poly<F::El>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VeluError {
    KernelNotMonicCubic,
    /// The kernel polynomial does not divide the 7-division polynomial.
    NotASevenKernel,
}

impl std::fmt::Display for VeluError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VeluError::KernelNotMonicCubic => write!(f, "kernel polynomial must be monic of degree 3"),
            VeluError::NotASevenKernel => {
                write!(f, "kernel polynomial does not divide the 7-division polynomial")
            }
        }
    }
}

impl std::error::Error for VeluError {}

/// The 7-division polynomial in x (degree 24, leading coefficient 7).
pub fn division_poly_7<F: Field>(m: &WeierstrassModel<F>) -> Poly<F::El> {
    let k = &m.ring;
    let pr = PolyRing::new(k.clone());
    let inv = m.invariants();
    let c = |v: &F::El| pr.constant(v.clone());
    // psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    let bsq = pr.poly(vec![
        inv.b6.clone(),
        k.mul(&k.from_i64(2), &inv.b4),
        inv.b2.clone(),
        k.from_i64(4),
    ]);
    // psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8
    let psi3 = pr.poly(vec![
        inv.b8.clone(),
        k.mul(&k.from_i64(3), &inv.b6),
        k.mul(&k.from_i64(3), &inv.b4),
        inv.b2.clone(),
        k.from_i64(3),
    ]);
    // psi_4 / psi_2 = 2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2
    //                + (b2 b8 - b4 b6) x + (b4 b8 - b6^2)
    let s4 = pr.poly(vec![
        k.sub(&k.mul(&inv.b4, &inv.b8), &k.mul(&inv.b6, &inv.b6)),
        k.sub(&k.mul(&inv.b2, &inv.b8), &k.mul(&inv.b4, &inv.b6)),
        k.mul(&k.from_i64(10), &inv.b8),
        k.mul(&k.from_i64(10), &inv.b6),
        k.mul(&k.from_i64(5), &inv.b4),
        inv.b2.clone(),
        k.from_i64(2),
    ]);
    // psi_5 = s4 * (psi_2^2)^2 - psi_3^3
    let psi5 = pr.sub_poly(
        &pr.mul_poly(&s4, &pr.mul_poly(&bsq, &bsq)),
        &pr.pow_poly(&psi3, 3),
    );
    // psi_7 = psi_5 psi_3^3 - (psi_2^2)^2 s4^3
    let psi7 = pr.sub_poly(
        &pr.mul_poly(&psi5, &pr.pow_poly(&psi3, 3)),
        &pr.mul_poly(&pr.mul_poly(&bsq, &bsq), &pr.pow_poly(&s4, 3)),
    );
    let _ = c;
    psi7
}

/// Velu's formulas for the quotient by the order-7 subgroup whose nonzero
/// points have x-coordinates the roots of `kernel`.
pub fn velu_isogeny<F: Field>(
    m: &WeierstrassModel<F>,
    kernel: &Poly<F::El>,
) -> Result<Isogeny<F>, VeluError> {
    let k = &m.ring;
    let pr = PolyRing::new(k.clone());
    if kernel.degree() != Some(3) || !k.is_one(kernel.leading().unwrap()) {
        return Err(VeluError::KernelNotMonicCubic);
    }
    let psi7 = division_poly_7(m);
    if !pr.rem(&psi7, kernel).unwrap().is_zero_poly() {
        return Err(VeluError::NotASevenKernel);
    }
    let inv = m.invariants();
    // Power sums of the kernel roots from h = x^3 + h2 x^2 + h1 x + h0.
    let h2 = pr.coeff(kernel, 2);
    let h1 = pr.coeff(kernel, 1);
    let h0 = pr.coeff(kernel, 0);
    let e1 = k.neg(&h2);
    let e2 = h1.clone();
    let e3 = k.neg(&h0);
    let p1 = e1.clone();
    let p2 = k.sub(&k.mul(&e1, &e1), &k.mul(&k.from_i64(2), &e2));
    let p3 = {
        let t = k.mul(&e1, &k.mul(&e1, &e1));
        let t = k.sub(&t, &k.mul(&k.from_i64(3), &k.mul(&e1, &e2)));
        k.add(&t, &k.mul(&k.from_i64(3), &e3))
    };
    // t = sum (6 x^2 + b2 x + b4), w = sum (u_Q + x t_Q)
    //   = 10 p3 + 2 b2 p2 + 3 b4 p1 + 3 b6.
    let t_sum = {
        let v = k.mul(&k.from_i64(6), &p2);
        let v = k.add(&v, &k.mul(&inv.b2, &p1));
        k.add(&v, &k.mul(&k.from_i64(3), &inv.b4))
    };
    let w_sum = {
        let v = k.mul(&k.from_i64(10), &p3);
        let v = k.add(&v, &k.mul(&k.from_i64(2), &k.mul(&inv.b2, &p2)));
        let v = k.add(&v, &k.mul(&k.from_i64(3), &k.mul(&inv.b4, &p1)));
        k.add(&v, &k.mul(&k.from_i64(3), &inv.b6))
    };
    let codomain = WeierstrassModel::new(
        k.clone(),
        m.a1.clone(),
        m.a2.clone(),
        m.a3.clone(),
        k.sub(&m.a4, &k.mul(&k.from_i64(5), &t_sum)),
        {
            let v = k.sub(&m.a6, &k.mul(&inv.b2, &t_sum));
            k.sub(&v, &k.mul(&k.from_i64(7), &w_sum))
        },
    );
    // x-map numerator: X = x + sum t_Q/(x - x_Q) + sum u_Q/(x - x_Q)^2.
    // With A_m = x^m h' - (partial power sums) h:
    //   sum x_Q^m/(x - x_Q)   = A_m / h,
    //   sum x_Q^m/(x - x_Q)^2 = (A_m h' - A_m' h)/h^2.
    let x = pr.var();
    let hp = pr.derivative(kernel);
    let a_m: Vec<Poly<F::El>> = {
        let x2 = pr.mul_poly(&x, &x);
        let x3 = pr.mul_poly(&x2, &x);
        let s0 = pr.constant(k.from_i64(3));
        let s1 = pr.poly(vec![p1.clone(), k.from_i64(3)]);
        let s2 = pr.poly(vec![p2.clone(), p1.clone(), k.from_i64(3)]);
        vec![
            hp.clone(),
            pr.sub_poly(&pr.mul_poly(&x, &hp), &pr.mul_poly(&s0, kernel)),
            pr.sub_poly(&pr.mul_poly(&x2, &hp), &pr.mul_poly(&s1, kernel)),
            pr.sub_poly(&pr.mul_poly(&x3, &hp), &pr.mul_poly(&s2, kernel)),
        ]
    };
    // T1 = (6x^2 + b2 x + b4) h' - (18x + 6 p1 + 3 b2) h
    let t1 = {
        let tq = pr.poly(vec![inv.b4.clone(), inv.b2.clone(), k.from_i64(6)]);
        let corr = pr.poly(vec![
            k.add(&k.mul(&k.from_i64(6), &p1), &k.mul(&k.from_i64(3), &inv.b2)),
            k.from_i64(18),
        ]);
        pr.sub_poly(&pr.mul_poly(&tq, &hp), &pr.mul_poly(&corr, kernel))
    };
    // U1 = sum over m of u-coefficients (4, b2, 2 b4, b6) of (A_m h' - A_m' h).
    let u1 = {
        let coeffs = [
            k.from_i64(4),
            inv.b2.clone(),
            k.mul(&k.from_i64(2), &inv.b4),
            inv.b6.clone(),
        ];
        // order: coefficient of x^3 is 4, x^2 is b2, x is 2 b4, 1 is b6.
        let mut acc = pr.zero();
        for (m_idx, coef) in [(3usize, &coeffs[0]), (2, &coeffs[1]), (1, &coeffs[2]), (0, &coeffs[3])] {
            let am = &a_m[m_idx];
            let amp = pr.derivative(am);
            let term = pr.sub_poly(&pr.mul_poly(am, &hp), &pr.mul_poly(&amp, kernel));
            acc = pr.add_poly(&acc, &pr.scale(coef, &term));
        }
        acc
    };
    let h_sq = pr.mul_poly(kernel, kernel);
    let x_num = {
        let t = pr.mul_poly(&x, &h_sq);
        let t = pr.add_poly(&t, &pr.mul_poly(&t1, kernel));
        pr.add_poly(&t, &u1)
    };
    Ok(Isogeny {
        domain: m.clone(),
        codomain,
        kernel: kernel.clone(),
        x_num,
    })
}

impl<F: Field> Isogeny<F> {
    /// Image of a point.  Kernel points (and infinity) map to infinity.
    /// The y-coordinate uses the normalized-differential relation
    /// eta(X, Y) = eta(x, y) dX/dx, which needs characteristic != 2.
    pub fn map_point(&self, p: &Point<F::El>) -> Point<F::El> {
        let k = &self.domain.ring;
        let pr = PolyRing::new(k.clone());
        let (x, y) = match p {
            Point::Infinity => return Point::Infinity,
            Point::Affine(x, y) => (x, y),
        };
        let hx = pr.eval(&self.kernel, x);
        if k.is_zero(&hx) {
            return Point::Infinity;
        }
        assert!(k.characteristic() != 2, "y-map needs characteristic != 2");
        let hx2 = k.mul(&hx, &hx);
        let nx = pr.eval(&self.x_num, x);
        let big_x = k.div(&nx, &hx2).unwrap();
        // dX/dx = (N' h - 2 N h') / h^3.
        let np = pr.eval(&pr.derivative(&self.x_num), x);
        let hpx = pr.eval(&pr.derivative(&self.kernel), x);
        let dxdx = {
            let num = k.sub(
                &k.mul(&np, &hx),
                &k.mul(&k.from_i64(2), &k.mul(&nx, &hpx)),
            );
            k.div(&num, &k.mul(&hx2, &hx)).unwrap()
        };
        let eta = {
            let v = k.mul(&k.from_i64(2), y);
            k.add(&v, &k.add(&k.mul(&self.domain.a1, x), &self.domain.a3))
        };
        let eta_new = k.mul(&eta, &dxdx);
        // Y = (eta_new - A1 X - A3)/2 on the codomain.
        let big_y = {
            let v = k.sub(
                &eta_new,
                &k.add(&k.mul(&self.codomain.a1, &big_x), &self.codomain.a3),
            );
            k.div(&v, &k.from_i64(2)).unwrap()
        };
        Point::Affine(big_x, big_y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use seven_algebra::ring::Fp;

    /// Find a curve over F_p with a point of order 7 and return it with the
    /// point, by exhaustive search.
    fn curve_with_seven_torsion(p: u64) -> (WeierstrassModel<Fp>, Point<u64>) {
        let fp = Fp::new(p);
        for a1 in 0..p {
            for a3 in 0..p {
                for a6 in 0..p {
                    let m = WeierstrassModel::new(fp, a1, 0, a3, 0, a6);
                    if m.is_singular() {
                        continue;
                    }
                    let mut pts = Vec::new();
                    for x in 0..p {
                        for y in 0..p {
                            let pt = Point::Affine(x, y);
                            if m.contains(&pt) {
                                pts.push(pt);
                            }
                        }
                    }
                    let n = pts.len() as i64 + 1;
                    if n % 7 != 0 {
                        continue;
                    }
                    for pt in &pts {
                        let q = m.mul_point(n / 7, pt);
                        if !q.is_infinity() && m.mul_point(7, &q).is_infinity() {
                            return (m, q);
                        }
                    }
                }
            }
        }
        panic!("no 7-torsion curve found over F_{p}");
    }

    fn kernel_from_point(m: &WeierstrassModel<Fp>, q: &Point<u64>) -> Poly<u64> {
        let fp = m.ring;
        let pr = PolyRing::new(fp);
        let mut h = pr.one();
        for i in 1..=3i64 {
            let multiple = m.mul_point(i, q);
            let (x, _) = multiple.xy().expect("nonzero multiple of a 7-torsion point");
            h = pr.mul_poly(&h, &pr.poly(vec![fp.neg(x), 1]));
        }
        h
    }

    #[test]
    fn division_polynomial_has_degree_24_and_leading_7() {
        let fp = Fp::new(13);
        let m = WeierstrassModel::from_i64(fp, [1, 0, 1, 4, 6]);
        let psi7 = division_poly_7(&m);
        assert_eq!(psi7.degree(), Some(24));
        assert_eq!(*psi7.leading().unwrap(), 7 % 13);
    }

    #[test]
    fn kernel_points_vanish_on_division_polynomial() {
        let (m, q) = curve_with_seven_torsion(13);
        let pr = PolyRing::new(m.ring);
        let psi7 = division_poly_7(&m);
        for i in 1..7i64 {
            let multiple = m.mul_point(i, &q);
            let (x, _) = multiple.xy().unwrap();
            assert_eq!(pr.eval(&psi7, x), 0);
        }
    }

    #[test]
    fn velu_images_land_on_codomain_and_kernel_dies() {
        let (m, q) = curve_with_seven_torsion(13);
        let kernel = kernel_from_point(&m, &q);
        let iso = velu_isogeny(&m, &kernel).unwrap();
        assert!(!iso.codomain.is_singular());
        // Kernel points map to infinity.
        for i in 1..7i64 {
            let img = iso.map_point(&m.mul_point(i, &q));
            assert!(img.is_infinity());
        }
        // All rational points map onto the codomain, and the map is a
        // homomorphism on a sample.
        let fp = m.ring;
        let mut pts = vec![Point::Infinity];
        for x in 0..fp.p() {
            for y in 0..fp.p() {
                let pt = Point::Affine(x, y);
                if m.contains(&pt) {
                    pts.push(pt);
                }
            }
        }
        for pt in &pts {
            let img = iso.map_point(pt);
            assert!(iso.codomain.contains(&img), "image off codomain for {pt:?}");
        }
        let mut rng = seven_algebra::rng::SplitMix64::new(77);
        for _ in 0..50 {
            let a = &pts[rng.u64_below(pts.len() as u64) as usize];
            let b = &pts[rng.u64_below(pts.len() as u64) as usize];
            let lhs = iso.map_point(&m.add_points(a, b));
            let rhs = iso
                .codomain
                .add_points(&iso.map_point(a), &iso.map_point(b));
            assert!(iso.codomain.eq_points(&lhs, &rhs));
        }
    }

    #[test]
    fn wrong_kernel_is_rejected() {
        let (m, _) = curve_with_seven_torsion(13);
        let pr = PolyRing::new(m.ring);
        let bogus = pr.from_i64_coeffs(&[1, 1, 1, 1]);
        assert_eq!(velu_isogeny(&m, &bogus).unwrap_err(), VeluError::NotASevenKernel);
        let not_cubic = pr.from_i64_coeffs(&[1, 1]);
        assert_eq!(
            velu_isogeny(&m, &not_cubic).unwrap_err(),
            VeluError::KernelNotMonicCubic
        );
    }
}
