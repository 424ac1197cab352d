//! Frobenius data mod 7 for curves over small finite fields, and the
//! exhaustive classification of long Weierstrass models over F_2.

use crate::model::WeierstrassModel;
use seven_algebra::finite::{Fq, FqEl};
use seven_algebra::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub q: u64,
    pub point_count: u64,
    /// Trace a = q + 1 - #E(F_q).
    pub trace: i64,
    /// T^2 - aT + q mod 7, as (constant, linear, quadratic) coefficients.
    pub charpoly_mod7: [u8; 3],
    /// Roots of the characteristic polynomial in F_7, sorted.
    pub eigenvalues_mod7: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobeniusError {
    SingularModel,
    FieldTooLarge,
}

impl std::fmt::Display for FrobeniusError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FrobeniusError::SingularModel => write!(f, "singular model"),
            FrobeniusError::FieldTooLarge => write!(f, "point count only supported for q <= 2^16"),
        }
    }
}

impl std::error::Error for FrobeniusError {}

/// Absolute trace F_{2^k} -> F_2.
fn trace_to_f2(field: &Fq, a: &FqEl) -> u64 {
    let mut acc = field.zero();
    let mut x = a.clone();
    for _ in 0..field.k() {
        acc = field.add(&acc, &x);
        x = field.mul(&x, &x);
    }
    // acc lies in F_2.
    acc.c[0]
}

/// #E(F_q) by direct summation over x of the number of y-roots.
pub fn count_points_fq(m: &WeierstrassModel<Fq>) -> Result<u64, FrobeniusError> {
    let f = &m.ring;
    let q = f.size();
    if q > 1 << 16 {
        return Err(FrobeniusError::FieldTooLarge);
    }
    if m.is_singular() {
        return Err(FrobeniusError::SingularModel);
    }
    let mut n = 1u64; // infinity
    if f.characteristic() == 2 {
        for idx in 0..q {
            let x = f.el_from_index(idx);
            // y^2 + c y = d with c = a1 x + a3,
            // d = x^3 + a2 x^2 + a4 x + a6.
            let c = f.add(&f.mul(&m.a1, &x), &m.a3);
            let x2 = f.mul(&x, &x);
            let d = f.add(
                &f.mul(&x2, &x),
                &f.add(&f.mul(&m.a2, &x2), &f.add(&f.mul(&m.a4, &x), &m.a6)),
            );
            if f.is_zero(&c) {
                // y^2 = d has exactly one root (Frobenius is bijective).
                n += 1;
            } else {
                // substitute y = c z: z^2 + z = d / c^2, solvable iff the
                // absolute trace vanishes, then 2 roots.
                let c2 = f.mul(&c, &c);
                let rhs = f.div(&d, &c2).unwrap();
                if trace_to_f2(f, &rhs) == 0 {
                    n += 2;
                }
            }
        }
    } else {
        let half = (q - 1) / 2;
        for idx in 0..q {
            let x = f.el_from_index(idx);
            // (2y + a1 x + a3)^2 = b-quartic: count via the quadratic
            // character of the completed square.
            let c = f.add(&f.mul(&m.a1, &x), &m.a3);
            let x2 = f.mul(&x, &x);
            let d = f.add(
                &f.mul(&x2, &x),
                &f.add(&f.mul(&m.a2, &x2), &f.add(&f.mul(&m.a4, &x), &m.a6)),
            );
            let disc = f.add(&f.mul(&c, &c), &f.mul(&f.from_i64(4), &d));
            if f.is_zero(&disc) {
                n += 1;
            } else {
                let chi = f.pow_u64(&disc, half);
                if f.is_one(&chi) {
                    n += 2;
                }
            }
        }
    }
    Ok(n)
}

/// Trace of Frobenius, the characteristic polynomial T^2 - aT + q mod 7,
/// and its eigenvalues in F_7.
pub fn frobenius_data_mod7(m: &WeierstrassModel<Fq>) -> Result<FrobeniusData, FrobeniusError> {
    let q = m.ring.size();
    let n = count_points_fq(m)?;
    let trace = q as i64 + 1 - n as i64;
    let a7 = trace.rem_euclid(7) as u8;
    let q7 = (q % 7) as u8;
    let charpoly = [q7, (7 - a7) % 7, 1];
    let mut eigenvalues = Vec::new();
    for lam in 0..7u8 {
        let val = (lam as u16 * lam as u16 + charpoly[1] as u16 * lam as u16 + charpoly[0] as u16) % 7;
        if val == 0 {
            eigenvalues.push(lam);
        }
    }
    Ok(FrobeniusData {
        q,
        point_count: n,
        trace,
        charpoly_mod7: charpoly,
        eigenvalues_mod7: eigenvalues,
    })
}

#[derive(Clone, Debug)]
pub struct F2Classification {
    pub nonsingular_models: usize,
    pub max_point_count: u64,
    /// Union of the mod-7 Frobenius eigenvalue sets over all nonsingular
    /// models, sorted.
    pub attained_eigenvalues: Vec<u8>,
    pub per_model: Vec<([i64; 5], FrobeniusData)>,
}

/// Enumerate all 32 long Weierstrass coefficient tuples over F_2.
pub fn enumerate_f2_models() -> F2Classification {
    let f2 = Fq::new(2, 1);
    let mut per_model = Vec::new();
    let mut attained = std::collections::BTreeSet::new();
    let mut max_count = 0;
    for bits in 0..32u32 {
        let a: Vec<i64> = (0..5).map(|i| ((bits >> i) & 1) as i64).collect();
        let coeffs = [a[0], a[1], a[2], a[3], a[4]];
        let m = WeierstrassModel::from_i64(f2.clone(), coeffs);
        match frobenius_data_mod7(&m) {
            Err(FrobeniusError::SingularModel) => continue,
            Err(e) => panic!("unexpected error: {e}"),
            Ok(data) => {
                max_count = max_count.max(data.point_count);
                for &e in &data.eigenvalues_mod7 {
                    attained.insert(e);
                }
                per_model.push((coeffs, data));
            }
        }
    }
    F2Classification {
        nonsingular_models: per_model.len(),
        max_point_count: max_count,
        attained_eigenvalues: attained.into_iter().collect(),
        per_model,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y2_plus_y_eq_x3_over_f2() {
        // #E = 3, a = 0, T^2 + 2 has no roots mod 7 (-2 = 5 is a
        // non-residue).
        let f2 = Fq::new(2, 1);
        let m = WeierstrassModel::from_i64(f2, [0, 0, 1, 0, 0]);
        let d = frobenius_data_mod7(&m).unwrap();
        assert_eq!(d.point_count, 3);
        assert_eq!(d.trace, 0);
        assert!(d.eigenvalues_mod7.is_empty());
    }

    #[test]
    fn f2_classification() {
        let cls = enumerate_f2_models();
        // Every nonsingular model has at most 5 points (so no rational
        // 7-torsion), and the attained eigenvalue set is exactly {3, 4}.
        assert!(cls.max_point_count <= 5);
        assert_eq!(cls.attained_eigenvalues, vec![3, 4]);
        // Weil bound on every model: a^2 <= 4q = 8.
        for (_, d) in &cls.per_model {
            assert!(d.trace * d.trace <= 8);
        }
        // Eigenvalue 4 comes exactly from trace 1, eigenvalue 3 from -1.
        for (_, d) in &cls.per_model {
            if d.eigenvalues_mod7.contains(&4) {
                assert_eq!(d.trace, 1);
            }
            if d.eigenvalues_mod7.contains(&3) {
                assert_eq!(d.trace, -1);
            }
        }
    }

    #[test]
    fn count_over_odd_prime_square_extension() {
        // Weil bound sanity over F_25 for a sample of models.
        let f25 = Fq::new(5, 2);
        let mut rng = seven_algebra::rng::SplitMix64::new(55);
        let mut tested = 0;
        while tested < 10 {
            let m = WeierstrassModel::from_i64(
                f25.clone(),
                [
                    rng.i64_in(0, 4),
                    rng.i64_in(0, 4),
                    rng.i64_in(0, 4),
                    rng.i64_in(0, 4),
                    rng.i64_in(0, 4),
                ],
            );
            let Ok(d) = frobenius_data_mod7(&m) else {
                continue;
            };
            assert!(d.trace * d.trace <= 100);
            tested += 1;
        }
    }
}
