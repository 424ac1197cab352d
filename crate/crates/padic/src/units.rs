//! Decomposition of units in the local field modulo 7th powers.
//!
//! k_pi^x / (k_pi^x)^7 is an 8-dimensional F_7 vector space with basis
//! {pi, 1+pi, 1+pi^2, ..., 1+pi^7}: the valuation mod 7 gives the pi
//! coordinate, the Teichmueller part is killed (every root of unity of
//! order prime to 7 is its own 7th power), the one-unit levels 1..7 are
//! stripped greedily, and the remainder lies in U^(8) = (U^(2))^7.

use crate::local::{LocalElem, LocalField};

/// Coordinates with respect to {pi, 1+pi, 1+pi^2, ..., 1+pi^7}, in order.
pub type UnitClassVector = [u8; 8];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitClassError {
    ZeroToPrecision,
    /// Not enough certified digits to strip one-unit levels through pi^7
    /// after the valuation shift.
    InsufficientPrecision { have: usize, need: usize },
}

impl std::fmt::Display for UnitClassError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnitClassError::ZeroToPrecision => write!(f, "cannot classify zero"),
            UnitClassError::InsufficientPrecision { have, need } => {
                write!(f, "need {need} pi-digits beyond the valuation, have {have}")
            }
        }
    }
}

impl std::error::Error for UnitClassError {}

/// The Teichmueller lift in Z_7 of a nonzero residue, as a constant element.
pub fn teichmueller(field: &LocalField, residue: u64) -> LocalElem {
    assert!((1..7).contains(&(residue % 7)));
    let zp = crate::zp::PadicInt::from_u64(7, field.digits7(), residue % 7);
    let t = zp.teichmueller();
    field.from_bigint(&num_bigint::BigInt::from(t.residue().clone()))
}

/// Coordinates of u in k_pi^x/(k_pi^x)^7.
///
/// Algorithm: e_0 = v(u) mod 7; divide by pi^v(u); drop the Teichmueller
/// part; strip one-unit levels m = 1..7 greedily using
/// (1 + pi^m)^c = 1 + c pi^m + O(pi^(m+1)); the remainder lies in
/// U^(8) = (U^(2))^7 and is discarded.
pub fn unit_class_decompose(
    field: &LocalField,
    u: &LocalElem,
) -> Result<UnitClassVector, UnitClassError> {
    let v = field.val(u).ok_or(UnitClassError::ZeroToPrecision)?;
    let beyond = u.prec().saturating_sub(v);
    if beyond < 8 {
        return Err(UnitClassError::InsufficientPrecision {
            have: beyond,
            need: 8,
        });
    }
    let mut out = [0u8; 8];
    out[0] = (v % 7) as u8;
    let mut w = field
        .shift_down(u, v)
        .expect("valuation was just computed");
    let theta = teichmueller(field, field.residue(&w));
    let theta_inv = field.inv(&theta).expect("Teichmueller lift is a unit");
    w = field.mul(&w, &theta_inv);
    for m in 1..=7usize {
        let delta = field.sub(&w, &field.one());
        let vd = match field.val(&delta) {
            None => break, // 1 exactly, to precision
            Some(vd) => vd,
        };
        debug_assert!(vd >= m, "stripping invariant violated");
        if vd > m {
            continue;
        }
        let digit = field.residue(
            &field
                .shift_down(&delta, m)
                .expect("valuation checked above"),
        );
        out[m] = digit as u8;
        if digit != 0 {
            let basis_pow = field.pow_u(&field.one_unit(m), digit);
            let inv = field.inv(&basis_pow).expect("one-unit is a unit");
            w = field.mul(&w, &inv);
        }
    }
    // Sanity: the remainder is a 1-unit of level >= 8 (up to precision).
    if let Some(vr) = field.val(&field.sub(&w, &field.one())) {
        debug_assert!(vr >= 8, "remainder escaped U^(8): level {vr}");
    }
    Ok(out)
}

pub fn class_add(a: &UnitClassVector, b: &UnitClassVector) -> UnitClassVector {
    let mut out = [0u8; 8];
    for i in 0..8 {
        out[i] = (a[i] + b[i]) % 7;
    }
    out
}

pub fn class_sub(a: &UnitClassVector, b: &UnitClassVector) -> UnitClassVector {
    let mut out = [0u8; 8];
    for i in 0..8 {
        out[i] = (a[i] + 7 - b[i]) % 7;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> LocalField {
        LocalField::new(120).unwrap()
    }

    fn random_unit(field: &LocalField, rng: &mut seven_algebra::rng::SplitMix64) -> LocalElem {
        loop {
            let digits: Vec<i64> = (0..12).map(|_| rng.i64_in(0, 6)).collect();
            let u = field.from_pi_digits(&digits);
            if field.val(&u) == Some(0) {
                return u;
            }
        }
    }

    #[test]
    fn basis_elements_have_unit_vectors() {
        let f = field();
        let cls = unit_class_decompose(&f, &f.one_unit(2)).unwrap();
        assert_eq!(cls, [0, 0, 1, 0, 0, 0, 0, 0]);
        let cls_pi = unit_class_decompose(&f, &f.pi()).unwrap();
        assert_eq!(cls_pi, [1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn multiplicativity_on_named_example() {
        // pi * (1+pi)^3 has class (1, 3, 0, ..., 0).
        let f = field();
        let u = f.mul(&f.pi(), &f.pow_u(&f.one_unit(1), 3));
        assert_eq!(unit_class_decompose(&f, &u).unwrap(), [1, 3, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn seventh_power_of_zeta_is_trivial() {
        // (1+pi)^7 = zeta^7 = 1: the zero vector.
        let f = field();
        let u = f.pow_u(&f.one_unit(1), 7);
        assert_eq!(unit_class_decompose(&f, &u).unwrap(), [0; 8]);
    }

    #[test]
    fn classes_are_multiplicative_randomized() {
        let f = field();
        let mut rng = seven_algebra::rng::SplitMix64::new(17);
        for _ in 0..500 {
            let a = random_unit(&f, &mut rng);
            let b = random_unit(&f, &mut rng);
            let ca = unit_class_decompose(&f, &a).unwrap();
            let cb = unit_class_decompose(&f, &b).unwrap();
            let cab = unit_class_decompose(&f, &f.mul(&a, &b)).unwrap();
            assert_eq!(cab, class_add(&ca, &cb));
        }
    }

    #[test]
    fn seventh_powers_are_trivial_randomized() {
        let f = field();
        let mut rng = seven_algebra::rng::SplitMix64::new(18);
        for _ in 0..100 {
            // Include a pi-power so the valuation path is exercised.
            let shift = rng.i64_in(0, 2) as usize;
            let u = f.mul(&random_unit(&f, &mut rng), &f.pi_pow(shift));
            let u7 = f.pow_u(&u, 7);
            assert_eq!(unit_class_decompose(&f, &u7).unwrap(), [0; 8]);
        }
    }

    #[test]
    fn teichmueller_part_is_dropped() {
        let f = field();
        for r in 1..7u64 {
            let t = teichmueller(&f, r);
            assert_eq!(unit_class_decompose(&f, &t).unwrap(), [0; 8]);
        }
    }

    #[test]
    fn insufficient_precision_reported() {
        let f = field();
        // An element certified to very few digits after a large shift.
        let x = f.pi_pow(115); // prec cap leaves < 8 digits beyond valuation
        let err = unit_class_decompose(&f, &x);
        assert!(matches!(err, Err(UnitClassError::InsufficientPrecision { .. })));
    }
}
