//! One-sided minimality test at a prime: for p >= 5 an integral model with
//! ord_p(disc) < 12 or ord_p(c4) < 4 is minimal at p.  The converse
//! direction is out of scope, so the other outcome is "inconclusive".

use crate::model::WeierstrassModel;
use seven_algebra::arith::{ord_p, PadicOrder};
use seven_algebra::ring::Rationals;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalityError {
    NonIntegralModel,
}

impl std::fmt::Display for MinimalityError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "model is not integral at the given prime")
    }
}

impl std::error::Error for MinimalityError {}

pub fn minimality_at_p(
    m: &WeierstrassModel<Rationals>,
    p: u64,
) -> Result<Minimality, MinimalityError> {
    for a in [&m.a1, &m.a2, &m.a3, &m.a4, &m.a6] {
        if let PadicOrder::Finite(v) = ord_p(a, p) {
            if v < 0 {
                return Err(MinimalityError::NonIntegralModel);
            }
        }
    }
    let inv = m.invariants();
    let v_disc = ord_p(&inv.disc, p);
    let v_c4 = ord_p(&inv.c4, p);
    let small_disc = matches!(v_disc, PadicOrder::Finite(v) if v < 12);
    let small_c4 = matches!(v_c4, PadicOrder::Finite(v) if v < 4);
    if small_disc || small_c4 {
        Ok(Minimality::Minimal)
    } else {
        Ok(Minimality::Inconclusive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_case_is_inconclusive() {
        // y^2 = x^3 + 7^12: ord_7(disc) >= 12 and c4 = 0.
        let q = Rationals;
        let m = WeierstrassModel::from_i64(q, [0, 0, 0, 0, 13_841_287_201]);
        assert_eq!(minimality_at_p(&m, 7), Ok(Minimality::Inconclusive));
    }

    #[test]
    fn small_disc_is_minimal() {
        let q = Rationals;
        let m = WeierstrassModel::from_i64(q, [0, 0, 0, -1, 1]);
        assert_eq!(minimality_at_p(&m, 7), Ok(Minimality::Minimal));
    }

    #[test]
    fn non_integral_rejected() {
        let q = Rationals;
        let mut m = WeierstrassModel::from_i64(q, [0, 0, 0, 1, 1]);
        m.a4 = q.ratio(1, 7);
        assert_eq!(
            minimality_at_p(&m, 7),
            Err(MinimalityError::NonIntegralModel)
        );
    }
}
