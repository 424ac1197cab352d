//! 7th roots in the local field, and lifting x-coordinates to points of the
//! degree-7 cover y^7 = num(x) den(x)^6.

use crate::local::{LocalElem, LocalField, LocalFieldError};
use crate::units::{teichmueller, unit_class_decompose, UnitClassError, UnitClassVector};
use seven_algebra::cubics;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootError {
    /// v(c) not divisible by 7, or a nonzero unit class: no 7th root exists.
    NoSeventhRoot { class: Option<UnitClassVector> },
    /// The provided seed does not satisfy v(seed^7 - c) > 2 v(7 seed^6).
    OutsideNewtonBasin { defect: Option<usize>, need: usize },
    InsufficientPrecision,
    Field(LocalFieldError),
}

impl std::fmt::Display for RootError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootError::NoSeventhRoot { class } => write!(f, "no 7th root (class {class:?})"),
            RootError::OutsideNewtonBasin { defect, need } => {
                write!(f, "seed defect valuation {defect:?} does not exceed {need}")
            }
            RootError::InsufficientPrecision => write!(f, "insufficient precision"),
            RootError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RootError {}

impl From<LocalFieldError> for RootError {
    fn from(e: LocalFieldError) -> Self {
        RootError::Field(e)
    }
}

impl From<UnitClassError> for RootError {
    fn from(e: UnitClassError) -> Self {
        match e {
            UnitClassError::ZeroToPrecision => RootError::NoSeventhRoot { class: None },
            UnitClassError::InsufficientPrecision { .. } => RootError::InsufficientPrecision,
        }
    }
}

/// Newton iteration for y^7 = c from a caller-supplied seed.  The basin
/// condition is v(seed^7 - c) > 2 v(7 seed^6) = 2(6 + 6 v(seed)); each
/// normalization divides by 7 y^6, losing at most 6 + 6 v(y) pi-digits,
/// and the returned element's certified precision reflects the loss.
pub fn seventh_root(
    field: &LocalField,
    c: &LocalElem,
    seed: &LocalElem,
) -> Result<LocalElem, RootError> {
    let vs = field.val(seed).ok_or(RootError::NoSeventhRoot { class: None })?;
    let need = 2 * (6 + 6 * vs);
    let defect = field.sub(&field.pow_u(seed, 7), c);
    match field.val(&defect) {
        Some(v) if v <= need => {
            return Err(RootError::OutsideNewtonBasin {
                defect: Some(v),
                need,
            });
        }
        _ => {}
    }
    let mut y = seed.clone();
    let deriv_loss = 6 + 6 * vs;
    let mut last_defect = None;
    for _ in 0..64 {
        let fy = field.sub(&field.pow_u(&y, 7), c);
        let vfy = field.val(&fy);
        let done = match vfy {
            None => true,
            Some(v) => {
                // Stop at a fixed point (precision exhausted).
                let stalled = last_defect.map_or(false, |prev| v <= prev);
                last_defect = Some(v);
                stalled
            }
        };
        if done {
            // The root is certified to the defect level minus one
            // derivative division.
            let defect_level = vfy.unwrap_or(fy.prec());
            let mut out = y;
            out.prec = out.prec.min(defect_level.saturating_sub(deriv_loss)).max(1);
            return Ok(out);
        }
        let y6 = field.pow_u(&y, 6);
        let dy = field.mul(&field.from_i64(7), &y6);
        let step = field.div(&fy, &dy)?;
        y = field.sub(&y, &step);
    }
    Err(RootError::InsufficientPrecision)
}

/// Deterministic 7th root: scales out pi^(v/7), splits off the Teichmueller
/// part (its own 7th root), strips one-unit levels 8..13 to build a seed
/// deep inside the Newton basin, then polishes with `seventh_root`.
/// Fails with the obstructing unit class when c is not a 7th power.
pub fn seventh_root_canonical(field: &LocalField, c: &LocalElem) -> Result<LocalElem, RootError> {
    let v = field.val(c).ok_or(RootError::NoSeventhRoot { class: None })?;
    if v % 7 != 0 {
        let mut class = [0u8; 8];
        class[0] = (v % 7) as u8;
        return Err(RootError::NoSeventhRoot { class: Some(class) });
    }
    let u = field.shift_down(c, v)?;
    let class = unit_class_decompose(field, &u)?;
    if class != [0u8; 8] {
        return Err(RootError::NoSeventhRoot { class: Some(class) });
    }
    // Teichmueller part: theta satisfies theta^7 = theta, so theta is its
    // own 7th root.
    let theta = teichmueller(field, field.residue(&u));
    let mut y = theta;
    // Strip levels l = 8..13: with u7 = 7/pi^6 (a unit) and m = l - 6 >= 2,
    // (1 + a pi^m)^7 = 1 + a u7 pi^l + higher, so each level is killed by
    // one multiplier on y.
    let u7 = field.shift_down(&field.from_i64(7), 6)?;
    let u7_res = field.residue(&u7);
    let u7_res_inv = inv_mod7(u7_res);
    for level in 8..14usize {
        let y7 = field.pow_u(&y, 7);
        let r = field.div(&u, &y7)?;
        let delta = field.sub(&r, &field.one());
        let vd = match field.val(&delta) {
            None => break,
            Some(vd) => vd,
        };
        if vd > level {
            continue;
        }
        debug_assert!(vd >= level, "level stripping fell behind: {vd} < {level}");
        let digit = field.residue(&field.shift_down(&delta, level)?);
        if digit == 0 {
            continue;
        }
        let a = (digit * u7_res_inv) % 7;
        let m = level - 6;
        let mult = field.add(
            &field.one(),
            &field.mul(&field.from_i64(a as i64), &field.pi_pow(m)),
        );
        y = field.mul(&y, &mult);
    }
    let unit_root = seventh_root(field, &u, &y)?;
    // Reattach pi^(v/7).
    Ok(field.mul(&unit_root, &field.pi_pow(v / 7)))
}

fn inv_mod7(a: u64) -> u64 {
    const INV: [u64; 7] = [0, 1, 4, 5, 2, 3, 6];
    INV[(a % 7) as usize]
}

fn eval_cubic_local(field: &LocalField, coeffs: &[i64; 4], x: &LocalElem) -> LocalElem {
    let mut acc = field.zero();
    for &c in coeffs.iter().rev() {
        acc = field.add(&field.mul(&acc, x), &field.from_i64(c));
    }
    acc
}

/// f(x) = num(x) * den(x)^6 (the right-hand side of the cover equation).
pub fn cover_rhs(field: &LocalField, x: &LocalElem) -> LocalElem {
    let n = eval_cubic_local(field, &cubics::NUM_CUBIC, x);
    let d = eval_cubic_local(field, &cubics::DEN_CUBIC, x);
    field.mul(&n, &field.pow_u(&d, 6))
}

/// Lift an x-coordinate (given to at least 18 pi-digits) to a point
/// (x, y) with y^7 = num(x) den(x)^6, y chosen by the canonical seed rule.
pub fn lift_point_on_x(
    field: &LocalField,
    x: &LocalElem,
) -> Result<(LocalElem, LocalElem), RootError> {
    if x.prec() < 18 {
        return Err(RootError::InsufficientPrecision);
    }
    let c = cover_rhs(field, x);
    let y = seventh_root_canonical(field, &c)?;
    Ok((x.clone(), y))
}
