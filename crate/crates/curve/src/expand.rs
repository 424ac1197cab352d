//! Local power-series expansions on the curve at nonsingular points with
//! w not in {0, infinity}: at a finite point the uniformizer is
//! t = v - v(P); at the point over v = infinity it is u = 1/v.  The
//! w-coordinate is solved as a series by Newton lifting (7 w^6 den(v) is a
//! unit at such points), and a differential given by its coordinates
//! c_ij in the basis v^i w^j / (den(v) w^6) dv is expanded as a series
//! times dt (or du).

use seven_algebra::cubics;
use seven_algebra::poly::PolyRing;
use seven_algebra::ring::{Fp, Ring};
use seven_algebra::series::{newton_solve, NewtonError, PowerSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpandError {
    /// Branch points (w = 0 or infinity) are excluded by contract.
    BranchPoint,
    OffCurve,
    Newton(NewtonError),
}

impl std::fmt::Display for ExpandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExpandError::BranchPoint => write!(f, "expansion refused at a branch point"),
            ExpandError::OffCurve => write!(f, "seed is not a point of the curve"),
            ExpandError::Newton(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ExpandError {}

/// Where to expand: a finite point (v0, w0) or the rational point over
/// v = infinity with w = w0.
#[derive(Clone, Copy, Debug)]
pub enum ExpansionSite {
    Finite { v0: u64, w0: u64 },
    AtInfinity { w0: u64 },
}

/// The w-coordinate as a series in the uniformizer, to absolute order n.
pub fn w_series(field: Fp, site: ExpansionSite, n: usize) -> Result<PowerSeries<Fp>, ExpandError> {
    let pr = PolyRing::new(field);
    match site {
        ExpansionSite::Finite { v0, w0 } => {
            if w0 == 0 {
                return Err(ExpandError::BranchPoint);
            }
            // F(t, y) = y^7 den(v0 + t) - num(v0 + t).
            let shift = pr.from_i64_coeffs(&[v0 as i64, 1]);
            let num = pr.compose(&cubics::num_cubic(&pr), &shift);
            let den = pr.compose(&cubics::den_cubic(&pr), &shift);
            let mut coeffs = vec![pr.neg_poly(&num)];
            for _ in 0..6 {
                coeffs.push(pr.zero());
            }
            coeffs.push(den);
            newton_solve(&field, &coeffs, &w0, n).map_err(|e| match e {
                NewtonError::NotARoot => ExpandError::OffCurve,
                NewtonError::SingularPoint => ExpandError::BranchPoint,
            })
        }
        ExpansionSite::AtInfinity { w0 } => {
            if w0 == 0 {
                return Err(ExpandError::BranchPoint);
            }
            // In u = 1/v: w^7 = den(u)/num(u) after reversal (the two
            // cubics are each other's reverses), so
            // F(u, y) = y^7 num(u) - den(u).
            let num = cubics::num_cubic(&pr);
            let den = cubics::den_cubic(&pr);
            let mut coeffs = vec![pr.neg_poly(&den)];
            for _ in 0..6 {
                coeffs.push(pr.zero());
            }
            coeffs.push(num);
            newton_solve(&field, &coeffs, &w0, n).map_err(|e| match e {
                NewtonError::NotARoot => ExpandError::OffCurve,
                NewtonError::SingularPoint => ExpandError::BranchPoint,
            })
        }
    }
}

/// Expansion of the differential with coordinates `c` (ascending in the
/// basis w_00..w_05, w_10..w_15) as (series) * d(uniformizer).
pub fn omega_series(
    field: Fp,
    c: &[u8; 12],
    site: ExpansionSite,
    n: usize,
) -> Result<PowerSeries<Fp>, ExpandError> {
    let pr = PolyRing::new(field);
    let w = w_series(field, site, n)?;
    let mut wpow: Vec<PowerSeries<Fp>> = Vec::with_capacity(7);
    wpow.push(PowerSeries::constant(field, field.one(), n));
    for j in 1..=6 {
        wpow.push(wpow[j - 1].mul(&w));
    }
    match site {
        ExpansionSite::Finite { v0, .. } => {
            // v = v0 + t; omega/dt = sum c_ij v^i w^j / (den(v) w^6).
            let v = PowerSeries::from_coeffs(field, vec![v0, 1], n);
            let mut numerator = PowerSeries::zero(field, n);
            for i in 0..2usize {
                for j in 0..6usize {
                    let cij = c[i * 6 + j] % 7;
                    if cij == 0 {
                        continue;
                    }
                    let term = v.pow_u(i as u64).mul(&wpow[j]);
                    numerator = numerator.add(&term.scale(&field.from_i64(cij as i64)));
                }
            }
            let den_series = {
                let shift = pr.from_i64_coeffs(&[v0 as i64, 1]);
                let p = pr.compose(&cubics::den_cubic(&pr), &shift);
                PowerSeries::from_poly(field, &p, n)
            };
            let denom = den_series.mul(&wpow[6]);
            numerator.div(&denom).map_err(|_| ExpandError::BranchPoint)
        }
        ExpansionSite::AtInfinity { .. } => {
            // v = 1/u, dv = -du/u^2, den(1/u) = num(u)/u^3:
            // omega/du = -(sum c_ij u^(1-i) w^j) / (num(u) w^6).
            let u = PowerSeries::variable(field, n);
            let mut numerator = PowerSeries::zero(field, n);
            for i in 0..2usize {
                for j in 0..6usize {
                    let cij = c[i * 6 + j] % 7;
                    if cij == 0 {
                        continue;
                    }
                    let term = u.pow_u(1 - i as u64).mul(&wpow[j]);
                    numerator = numerator.add(&term.scale(&field.from_i64(cij as i64)));
                }
            }
            let num_series = PowerSeries::from_poly(field, &cubics::num_cubic(&pr), n);
            let denom = num_series.mul(&wpow[6]);
            let quotient = numerator.div(&denom).map_err(|_| ExpandError::BranchPoint)?;
            Ok(quotient.neg())
        }
    }
}

/// Vanishing order of the differential at the site (None if it vanishes to
/// the computed order).
pub fn omega_order(
    field: Fp,
    c: &[u8; 12],
    site: ExpansionSite,
    n: usize,
) -> Result<Option<usize>, ExpandError> {
    Ok(omega_series(field, c, site, n)?.order())
}
