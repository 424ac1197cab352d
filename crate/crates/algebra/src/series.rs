//! Truncated formal power series over a field, with explicit truncation
//! order, plus bivariate Newton lifting of implicit series roots.
//!
//! A series carries coefficients c_0..c_{prec-1}; every operation reports
//! the valid truncation order of its result (binary operations use the
//! minimum of the inputs).

use crate::poly::{Poly, PolyRing};
use crate::ring::Field;

#[derive(Clone, Debug)]
pub struct PowerSeries<F: Field> {
    pub ring: F,
    coeffs: Vec<F::El>,
    prec: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Division by a series with non-unit constant term.
    NonUnitDivisor,
    /// Composition with an inner series whose constant term is nonzero.
    InnerConstantTerm,
    /// Formal integration hit a coefficient division that does not exist in
    /// the coefficient field (n + 1 = 0 with a nonzero coefficient).
    InexactIntegration { at_exponent: usize },
}

impl std::fmt::Display for SeriesError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesError::NonUnitDivisor => write!(f, "division by series with non-unit constant term"),
            SeriesError::InnerConstantTerm => {
                write!(f, "composition requires inner series with zero constant term")
            }
            SeriesError::InexactIntegration { at_exponent } => {
                write!(f, "integration divides by zero at exponent {at_exponent}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonError {
    /// F(0, y0) != 0.
    NotARoot,
    /// dF/dy vanishes at (0, y0): the point is singular for the lift.
    SingularPoint,
}

impl std::fmt::Display for NewtonError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NewtonError::NotARoot => write!(f, "seed value is not a root at t = 0"),
            NewtonError::SingularPoint => write!(f, "derivative is not a unit at the seed"),
        }
    }
}

impl std::error::Error for NewtonError {}

impl<F: Field> PowerSeries<F> {
    pub fn zero(ring: F, prec: usize) -> Self {
        let coeffs = vec![ring.zero(); prec];
        PowerSeries { ring, coeffs, prec }
    }

    pub fn constant(ring: F, c: F::El, prec: usize) -> Self {
        let mut s = Self::zero(ring, prec);
        if prec > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn variable(ring: F, prec: usize) -> Self {
        let mut s = Self::zero(ring, prec);
        if prec > 1 {
            s.coeffs[1] = s.ring.one();
        }
        s
    }

    pub fn from_coeffs(ring: F, coeffs: Vec<F::El>, prec: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(prec, ring.zero());
        PowerSeries { ring, coeffs, prec }
    }

    pub fn from_poly(ring: F, p: &Poly<F::El>, prec: usize) -> Self {
        Self::from_coeffs(ring, p.coeffs.clone(), prec)
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn coeff(&self, i: usize) -> F::El {
        assert!(i < self.prec, "coefficient index beyond truncation order");
        self.coeffs[i].clone()
    }

    pub fn coeffs(&self) -> &[F::El] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient below the truncation order.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    pub fn truncate(&self, prec: usize) -> Self {
        let prec = prec.min(self.prec);
        PowerSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..prec].to_vec(),
            prec,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        let coeffs = (0..prec)
            .map(|i| self.ring.add(&self.coeffs[i], &rhs.coeffs[i]))
            .collect();
        PowerSeries {
            ring: self.ring.clone(),
            coeffs,
            prec,
        }
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        let mut coeffs = vec![self.ring.zero(); prec];
        for i in 0..prec.min(self.coeffs.len()) {
            if self.ring.is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..(prec - i).min(rhs.coeffs.len()) {
                let t = self.ring.mul(&self.coeffs[i], &rhs.coeffs[j]);
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &t);
            }
        }
        PowerSeries {
            ring: self.ring.clone(),
            coeffs,
            prec,
        }
    }

    pub fn scale(&self, c: &F::El) -> Self {
        PowerSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|x| self.ring.mul(c, x)).collect(),
            prec: self.prec,
        }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self
            .coeffs
            .first()
            .ok_or(SeriesError::NonUnitDivisor)?;
        let d0 = self.ring.inv(c0).ok_or(SeriesError::NonUnitDivisor)?;
        let mut out = vec![self.ring.zero(); self.prec];
        out[0] = d0.clone();
        for n in 1..self.prec {
            let mut acc = self.ring.zero();
            for i in 1..=n {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero());
                acc = self.ring.add(&acc, &self.ring.mul(&a, &out[n - i]));
            }
            out[n] = self.ring.neg(&self.ring.mul(&d0, &acc));
        }
        Ok(PowerSeries {
            ring: self.ring.clone(),
            coeffs: out,
            prec: self.prec,
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// Substitute `inner` (zero constant term) into self.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if let Some(c0) = inner.coeffs.first() {
            if !self.ring.is_zero(c0) {
                return Err(SeriesError::InnerConstantTerm);
            }
        }
        let prec = self.prec.min(inner.prec);
        let mut acc = PowerSeries::zero(self.ring.clone(), prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner.truncate(prec));
            acc.coeffs[0] = self.ring.add(&acc.coeffs[0], c);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let prec = self.prec.saturating_sub(1);
        let coeffs = (0..prec)
            .map(|i| {
                self.ring
                    .mul(&self.ring.from_i64(i as i64 + 1), &self.coeffs[i + 1])
            })
            .collect();
        PowerSeries {
            ring: self.ring.clone(),
            coeffs,
            prec,
        }
    }

    /// Termwise primitive: sum c_n t^n maps to sum c_n t^(n+1) / (n+1),
    /// with constant term 0.  Errors when some required division by n+1
    /// does not exist in the coefficient field.
    pub fn formal_integrate(&self) -> Result<Self, SeriesError> {
        let prec = self.prec + 1;
        let mut coeffs = vec![self.ring.zero(); prec];
        for (n, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let den = self.ring.from_i64(n as i64 + 1);
            match self.ring.inv(&den) {
                Some(inv) => coeffs[n + 1] = self.ring.mul(c, &inv),
                None => return Err(SeriesError::InexactIntegration { at_exponent: n }),
            }
        }
        Ok(PowerSeries {
            ring: self.ring.clone(),
            coeffs,
            prec,
        })
    }

    pub fn pow_u(&self, e: u64) -> Self {
        let mut acc = PowerSeries::constant(self.ring.clone(), self.ring.one(), self.prec);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eq_series(&self, rhs: &Self) -> bool {
        let prec = self.prec.min(rhs.prec);
        (0..prec).all(|i| self.ring.eq_el(&self.coeffs[i], &rhs.coeffs[i]))
    }
}

/// Solve F(t, y(t)) = 0 mod t^prec for y with y(0) = y0, where F is given by
/// its coefficients in y (each a polynomial in t).  Requires F(0, y0) = 0 and
/// dF/dy(0, y0) a unit; Newton iteration doubles the number of correct
/// digits per step.
pub fn newton_solve<F: Field>(
    ring: &F,
    f_y_coeffs: &[Poly<F::El>],
    y0: &F::El,
    prec: usize,
) -> Result<PowerSeries<F>, NewtonError> {
    let pr = PolyRing::new(ring.clone());
    // F(0, y0) and F_y(0, y0).
    let at0: Vec<F::El> = f_y_coeffs.iter().map(|c| pr.eval(c, &ring.zero())).collect();
    let f0 = horner(ring, &at0, y0);
    if !ring.is_zero(&f0) {
        return Err(NewtonError::NotARoot);
    }
    let deriv0: Vec<F::El> = at0
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| ring.mul(&ring.from_i64(j as i64), c))
        .collect();
    let fy0 = horner(ring, &deriv0, y0);
    if ring.inv(&fy0).is_none() {
        return Err(NewtonError::SingularPoint);
    }

    let mut cur_prec = 1usize;
    let mut y = PowerSeries::constant(ring.clone(), y0.clone(), 1);
    while cur_prec < prec {
        cur_prec = (cur_prec * 2).min(prec);
        // Re-expand y at the doubled precision.
        y = PowerSeries::from_coeffs(ring.clone(), y.coeffs().to_vec(), cur_prec);
        let fy = eval_bivariate(ring, f_y_coeffs, &y, cur_prec);
        let fyp = eval_bivariate_dy(ring, f_y_coeffs, &y, cur_prec);
        let correction = fy
            .div(&fyp)
            .expect("derivative stays a unit inside the Newton basin");
        y = y.sub(&correction);
    }
    Ok(y)
}

fn horner<F: Field>(ring: &F, coeffs: &[F::El], x: &F::El) -> F::El {
    let mut acc = ring.zero();
    for c in coeffs.iter().rev() {
        acc = ring.add(&ring.mul(&acc, x), c);
    }
    acc
}

/// F(t, y(t)) truncated.
fn eval_bivariate<F: Field>(
    ring: &F,
    f_y_coeffs: &[Poly<F::El>],
    y: &PowerSeries<F>,
    prec: usize,
) -> PowerSeries<F> {
    let mut acc = PowerSeries::zero(ring.clone(), prec);
    for c in f_y_coeffs.iter().rev() {
        acc = acc.mul(y);
        let cs = PowerSeries::from_poly(ring.clone(), c, prec);
        acc = acc.add(&cs);
    }
    acc
}

/// dF/dy(t, y(t)) truncated.
fn eval_bivariate_dy<F: Field>(
    ring: &F,
    f_y_coeffs: &[Poly<F::El>],
    y: &PowerSeries<F>,
    prec: usize,
) -> PowerSeries<F> {
    let d: Vec<Poly<F::El>> = f_y_coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| {
            let pr = PolyRing::new(ring.clone());
            pr.scale(&ring.from_i64(j as i64), c)
        })
        .collect();
    eval_bivariate(ring, &d, y, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Fp, Rationals, Ring};

    #[test]
    fn basic_products() {
        let q = Rationals;
        let one_plus_t = PowerSeries::from_coeffs(q, vec![q.from_i64(1), q.from_i64(1)], 4);
        let one_minus_t = PowerSeries::from_coeffs(q, vec![q.from_i64(1), q.from_i64(-1)], 4);
        let prod = one_plus_t.mul(&one_minus_t);
        assert!(q.eq_el(&prod.coeff(0), &q.from_i64(1)));
        assert!(q.is_zero(&prod.coeff(1)));
        assert!(q.eq_el(&prod.coeff(2), &q.from_i64(-1)));
        assert!(q.is_zero(&prod.coeff(3)));
    }

    #[test]
    fn geometric_series_inverse() {
        let q = Rationals;
        let one_minus_t = PowerSeries::from_coeffs(q, vec![q.from_i64(1), q.from_i64(-1)], 6);
        let inv = one_minus_t.inverse().unwrap();
        for i in 0..6 {
            assert!(q.is_one(&inv.coeff(i)));
        }
    }

    #[test]
    fn integrate_linear() {
        let q = Rationals;
        let f = PowerSeries::from_coeffs(q, vec![q.from_i64(1), q.from_i64(2)], 2);
        let int = f.formal_integrate().unwrap();
        assert!(q.is_zero(&int.coeff(0)));
        assert!(q.is_one(&int.coeff(1)));
        assert!(q.is_one(&int.coeff(2)));
    }

    #[test]
    fn integration_obstruction_in_char_5() {
        let f5 = Fp::new(5);
        // t^4 cannot be integrated in F_5[[t]].
        let mut coeffs = vec![0u64; 5];
        coeffs[4] = 1;
        let f = PowerSeries::from_coeffs(f5, coeffs, 5);
        assert_eq!(
            f.formal_integrate().unwrap_err(),
            SeriesError::InexactIntegration { at_exponent: 4 }
        );
        // But a zero coefficient there is fine.
        let g = PowerSeries::from_coeffs(f5, vec![1, 2, 0, 0, 0], 5);
        assert!(g.formal_integrate().is_ok());
    }

    #[test]
    fn newton_trivial_and_sqrt() {
        let q = Rationals;
        let pr = PolyRing::new(q);
        // F = y - t.
        let f = vec![pr.from_i64_coeffs(&[0, -1]), pr.one()];
        let y = newton_solve(&q, &f, &q.from_i64(0), 5).unwrap();
        assert_eq!(y.order(), Some(1));
        assert!(q.is_one(&y.coeff(1)));
        assert!(q.is_zero(&y.coeff(2)));

        // F = y^2 - (1 + t) over F13, y0 = 1: sqrt(1+t) = 1 + 7t + ...
        let f13 = Fp::new(13);
        let pr13 = PolyRing::new(f13);
        let f2 = vec![
            pr13.from_i64_coeffs(&[-1, -1]),
            pr13.zero(),
            pr13.one(),
        ];
        let y = newton_solve(&f13, &f2, &1u64, 8).unwrap();
        assert_eq!(y.coeff(0), 1);
        assert_eq!(y.coeff(1), 7); // 1/2 = 7 mod 13
        let sq = y.mul(&y);
        assert_eq!(sq.coeff(0), 1);
        assert_eq!(sq.coeff(1), 1);
        for i in 2..8 {
            assert_eq!(sq.coeff(i), 0);
        }
    }

    #[test]
    fn newton_curve_branch_over_f5() {
        // y^7 den(t) - num(t) = 0 with y(0) = 1 at t = 0: the branch through
        // (0, 1); substitute back and require exact vanishing mod t^N.
        let f5 = Fp::new(5);
        let pr = PolyRing::new(f5);
        let num = crate::cubics::num_cubic(&pr);
        let den = crate::cubics::den_cubic(&pr);
        let mut coeffs = vec![pr.neg_poly(&num)];
        for _ in 0..6 {
            coeffs.push(pr.zero());
        }
        coeffs.push(den);
        let y = newton_solve(&f5, &coeffs, &1u64, 12).unwrap();
        assert_eq!(y.coeff(0), 1);
        let y7 = y.pow_u(7);
        let den_s = PowerSeries::from_poly(f5, &crate::cubics::den_cubic(&pr), 12);
        let num_s = PowerSeries::from_poly(f5, &crate::cubics::num_cubic(&pr), 12);
        let residual = y7.mul(&den_s).sub(&num_s);
        assert_eq!(residual.order(), None, "residual must vanish identically");
    }

    #[test]
    fn newton_error_taxonomy() {
        let q = Rationals;
        let pr = PolyRing::new(q);
        // F = y^2 - t: singular at y0 = 0 (derivative vanishes).
        let f = vec![pr.from_i64_coeffs(&[0, -1]), pr.zero(), pr.one()];
        assert_eq!(
            newton_solve(&q, &f, &q.from_i64(0), 4).unwrap_err(),
            NewtonError::SingularPoint
        );
        // F = y - 1 at y0 = 0: not a root.
        let g = vec![pr.from_i64_coeffs(&[-1]), pr.one()];
        assert_eq!(
            newton_solve(&q, &g, &q.from_i64(0), 4).unwrap_err(),
            NewtonError::NotARoot
        );
    }
}
