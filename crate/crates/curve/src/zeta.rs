//! The order of the Jacobian over F_13 from the point counts of C over
//! F_{13^k}, k = 1..6: the Jacobian is isogenous to the square of the
//! Jacobian of the genus-6 quotient (the isogeny has good reduction away
//! from 7 and transfers to F_13), so the count power sums are twice those
//! of a degree-12 Weil polynomial Q(T); Newton's identities recover its
//! first six coefficients, the functional equation the rest, and
//! |J(F_13)| = Q(1)^2.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use seven_algebra::finite::Fq;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZetaError {
    /// s_k = 13^k + 1 - N_k must be even (the counts of a square).
    OddPowerSum { k: usize },
    /// Newton's identities produced a non-integral coefficient.
    NonIntegralNewton { k: usize },
    /// Round trip from Q(T) failed to reproduce a count.
    RoundTripMismatch { k: usize },
}

impl std::fmt::Display for ZetaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZetaError::OddPowerSum { k } => write!(f, "odd power sum at k = {k}"),
            ZetaError::NonIntegralNewton { k } => write!(f, "non-integral Newton step at k = {k}"),
            ZetaError::RoundTripMismatch { k } => write!(f, "round-trip count mismatch at k = {k}"),
        }
    }
}

impl std::error::Error for ZetaError {}

#[derive(Clone, Debug)]
pub struct ZetaReport {
    pub counts: Vec<u64>,
    /// Coefficients of Q(T), ascending, degree 12, Q(0) = 1.
    pub q_poly: Vec<BigInt>,
    pub q_at_1: BigInt,
    pub jacobian_order: BigInt,
    pub functional_equation_holds: bool,
    pub divisible_by_5: bool,
}

/// Count C(F_{13^k}) for k = 1..6.
pub fn count_tower() -> Vec<u64> {
    (1..=6).map(|k| super::points::count_points(&Fq::new(13, k))).collect()
}

/// Weil bound |N - (q + 1)| <= 2 g sqrt(q) with g = 12.
pub fn weil_bound_ok(k: u32, n: u64) -> bool {
    let q = 13u64.pow(k);
    let diff = (n as i64 - (q as i64 + 1)).unsigned_abs();
    // diff^2 <= 576 q avoids floating point.
    diff * diff <= 576 * q
}

pub fn jacobian_order_13(counts: &[u64]) -> Result<ZetaReport, ZetaError> {
    assert_eq!(counts.len(), 6);
    // Power sums of the 12 Frobenius roots of the quotient Jacobian.
    let mut p = vec![BigInt::zero()]; // p[0] unused
    for (i, &n) in counts.iter().enumerate() {
        let k = i + 1;
        let qk = BigInt::from(13u64).pow(k as u32);
        let s = &qk + 1 - BigInt::from(n);
        if (&s % 2) != BigInt::zero() {
            return Err(ZetaError::OddPowerSum { k });
        }
        p.push(s / 2);
    }
    // Newton: p_k - e1 p_{k-1} + ... + (-1)^(k-1) e_{k-1} p_1
    //         + (-1)^k k e_k = 0.
    let mut e = vec![BigInt::one()]; // e[0] = 1
    for k in 1..=6usize {
        let mut acc = p[k].clone();
        for i in 1..k {
            let term = &e[i] * &p[k - i];
            if i % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        // (-1)^k k e_k = -acc  =>  e_k = (-1)^(k-1) acc / k
        let sign: BigInt = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let num = sign * acc;
        let kk = BigInt::from(k as u64);
        if (&num % &kk) != BigInt::zero() {
            return Err(ZetaError::NonIntegralNewton { k });
        }
        e.push(num / kk);
    }
    // Q(T) = prod (1 - delta_j T): c_i = (-1)^i e_i for i <= 6, and the
    // functional equation c_{12-i} = 13^(6-i) c_i completes the rest.
    let mut c = vec![BigInt::zero(); 13];
    for i in 0..=6usize {
        let sign: BigInt = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        c[i] = sign * &e[i];
    }
    for i in 0..6usize {
        c[12 - i] = BigInt::from(13u64).pow((6 - i) as u32) * &c[i];
    }
    // Round trip: recompute power sums from the full coefficient list and
    // compare all six counts.
    let mut e_full = vec![BigInt::zero(); 13];
    for i in 0..=12usize {
        let sign: BigInt = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        e_full[i] = sign * &c[i];
    }
    let mut p_full = vec![BigInt::zero(); 13];
    for k in 1..=12usize {
        // p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
        let mut acc = BigInt::zero();
        for i in 1..k {
            let term = &e_full[i] * &p_full[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let sign: BigInt = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        acc += sign * BigInt::from(k as u64) * &e_full[k];
        p_full[k] = acc;
    }
    for (i, &n) in counts.iter().enumerate() {
        let k = i + 1;
        let qk = BigInt::from(13u64).pow(k as u32);
        let predicted = &qk + 1 - 2 * &p_full[k];
        if predicted != BigInt::from(n) {
            return Err(ZetaError::RoundTripMismatch { k });
        }
    }
    // Functional equation as an identity of the completed list.
    let functional_equation_holds = (0..=12).all(|i| {
        if i <= 6 {
            c[12 - i] == BigInt::from(13u64).pow((6 - i) as u32) * &c[i]
        } else {
            true
        }
    });
    let q_at_1: BigInt = c.iter().sum();
    let jacobian_order = &q_at_1 * &q_at_1;
    let divisible_by_5 = (&jacobian_order % 5) == BigInt::zero();
    Ok(ZetaReport {
        counts: counts.to_vec(),
        q_poly: c,
        q_at_1,
        jacobian_order,
        functional_equation_holds,
        divisible_by_5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_counts_and_jacobian_order() {
        let counts = count_tower();
        // Odd-degree extensions have no 7th-power obstruction: N = q + 1.
        assert_eq!(counts[0], 14);
        assert_eq!(counts[2], 13u64.pow(3) + 1);
        assert_eq!(counts[4], 13u64.pow(5) + 1);
        for (i, &n) in counts.iter().enumerate() {
            assert!(weil_bound_ok(i as u32 + 1, n), "Weil bound at k = {}", i + 1);
        }
        let report = jacobian_order_13(&counts).unwrap();
        assert!(report.functional_equation_holds);
        // |J(F_13)| = 3^6 7^4 13^2 349^2 and Q(1) = 3^3 7^2 13 349.
        assert_eq!(report.q_at_1, BigInt::from(6_002_451u64));
        assert_eq!(
            report.jacobian_order,
            BigInt::from(3u64).pow(6)
                * BigInt::from(7u64).pow(4)
                * BigInt::from(13u64).pow(2)
                * BigInt::from(349u64).pow(2)
        );
        assert!(!report.divisible_by_5);
    }
}
