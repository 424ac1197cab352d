//! The local half of the descent: coordinate classes of x - alpha_i in
//! k_pi^x/(k_pi^x)^7 and the span of the Galois orbit of the six point
//! classes.

use crate::cyclo::CyclotomicData;
use crate::velement::VElement;
use seven_algebra::f7::{F7Subspace, MatF7};
use seven_padic::local::{LocalElem, LocalField};
use seven_padic::roots::{lift_point_on_x, RootError};
use seven_padic::units::{unit_class_decompose, UnitClassError, UnitClassVector};

pub struct LocalSide {
    pub field: LocalField,
    pub alphas: [LocalElem; 6],
}

#[derive(Clone, Debug)]
pub enum XtError {
    CoordinateHitsAlpha(usize),
    NotAPointX(RootError),
    Class(UnitClassError),
}

impl std::fmt::Display for XtError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            XtError::CoordinateHitsAlpha(i) => {
                write!(f, "x equals alpha_{} (general-position formula needed)", i + 1)
            }
            XtError::NotAPointX(e) => write!(f, "x is not the x-coordinate of a local point: {e}"),
            XtError::Class(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for XtError {}

impl LocalSide {
    pub fn new(cyclo: &CyclotomicData, precision: usize) -> Self {
        let field = LocalField::new(precision).expect("precision above the floor");
        let alphas: Vec<LocalElem> = cyclo
            .alphas
            .iter()
            .map(|a| cyclo.embed_local(&field, a))
            .collect();
        LocalSide {
            field,
            alphas: alphas.try_into().unwrap(),
        }
    }

    /// Raw (un-quotiented) slot classes of x - alpha_i.
    pub fn slot_classes(&self, x: &LocalElem) -> Result<[UnitClassVector; 6], XtError> {
        let f = &self.field;
        let mut out = [[0u8; 8]; 6];
        for (i, a) in self.alphas.iter().enumerate() {
            let diff = f.sub(x, a);
            if f.is_zero_to_prec(&diff) {
                return Err(XtError::CoordinateHitsAlpha(i));
            }
            out[i] = unit_class_decompose(f, &diff).map_err(XtError::Class)?;
        }
        Ok(out)
    }

    /// The class of the point below x in V(k_pi^x), after verifying that x
    /// really is the x-coordinate of a local point on the cover.
    pub fn xt_class(&self, x: &LocalElem) -> Result<VElement, XtError> {
        lift_point_on_x(&self.field, x).map_err(XtError::NotAPointX)?;
        let slots = self.slot_classes(x)?;
        Ok(VElement::from_slots(
            8,
            &std::array::from_fn(|i| slots[i].to_vec()),
        ))
    }

    /// Classes of the Galois orbit sigma_a(x) for a = 1..6 (x need not be
    /// rational).  Point existence transfers along the Galois action, so it
    /// is checked once.
    pub fn orbit_classes(&self, x: &LocalElem) -> Result<Vec<VElement>, XtError> {
        lift_point_on_x(&self.field, x).map_err(XtError::NotAPointX)?;
        let mut out = Vec::with_capacity(6);
        for a in 1..=6u64 {
            let xa = self.field.galois(a, x);
            let slots = self.slot_classes(&xa)?;
            out.push(VElement::from_slots(
                8,
                &std::array::from_fn(|i| slots[i].to_vec()),
            ));
        }
        Ok(out)
    }

    /// The matrix of the class-level action of sigma_a on
    /// k_pi^x/(k_pi^x)^7 (columns: images of the basis classes).
    pub fn galois_class_matrix(&self, a: u64) -> MatF7 {
        let f = &self.field;
        let mut cols: Vec<Vec<u8>> = Vec::with_capacity(8);
        let basis: Vec<LocalElem> = std::iter::once(f.pi())
            .chain((1..=7).map(|m| f.one_unit(m)))
            .collect();
        for b in &basis {
            let img = f.galois(a, b);
            let cls = unit_class_decompose(f, &img).expect("basis classes decompose");
            cols.push(cls.to_vec());
        }
        let mut m = MatF7::zero(8, 8);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..8 {
                m.set(i, j, col[i]);
            }
        }
        m
    }

    /// The permutation of the six alphas induced by sigma_a:
    /// sigma_a(alpha_j) = alpha_{perm[j]}.
    pub fn alpha_permutation(&self, a: u64) -> [usize; 6] {
        let f = &self.field;
        let mut perm = [usize::MAX; 6];
        for (j, alpha) in self.alphas.iter().enumerate() {
            let img = f.galois(a, alpha);
            let k = self
                .alphas
                .iter()
                .position(|b| f.eq_to_prec(&img, b))
                .expect("Galois permutes the alpha set");
            perm[j] = k;
        }
        perm
    }

    /// Span of the 36 orbit classes inside the 40-dimensional local space.
    pub fn local_image(&self, xs: &[LocalElem]) -> Result<F7Subspace, XtError> {
        let mut vectors = Vec::new();
        for x in xs {
            for v in self.orbit_classes(x)? {
                vectors.push(v.coords);
            }
        }
        Ok(F7Subspace::span(40, &vectors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::cyclotomic_setup;

    fn side() -> LocalSide {
        LocalSide::new(&cyclotomic_setup(), 120)
    }

    #[test]
    fn classes_at_zero_and_minus_one() {
        let s = side();
        let f = &s.field;
        // x = 0 and x = -1 are x-coordinates of rational points.
        let c0 = s.xt_class(&f.from_i64(0)).unwrap();
        let c1 = s.xt_class(&f.from_i64(-1)).unwrap();
        assert_eq!(c0.dim(), 40);
        assert!(!c0.is_zero());
        assert!(!c1.is_zero());
        // Galois conjugates of a rational x give the identical class.
        let orbit = s.orbit_classes(&f.from_i64(0)).unwrap();
        for v in &orbit {
            assert_eq!(*v, orbit[0]);
        }
    }

    #[test]
    fn diagonal_well_definedness() {
        // Multiplying every slot by the same unit leaves the class
        // unchanged: realized by comparing from_slots of shifted tuples.
        let s = side();
        let f = &s.field;
        let slots = s.slot_classes(&f.from_i64(-1)).unwrap();
        let shift = [3u8, 1, 0, 2, 0, 0, 5, 4];
        let shifted: [Vec<u8>; 6] = std::array::from_fn(|i| {
            (0..8).map(|j| (slots[i][j] + shift[j]) % 7).collect()
        });
        let base: [Vec<u8>; 6] = std::array::from_fn(|i| slots[i].to_vec());
        assert_eq!(
            VElement::from_slots(8, &base),
            VElement::from_slots(8, &shifted)
        );
    }

    #[test]
    fn galois_compatibility_on_rational_points() {
        // For rational x, sigma_a(x) = x, so the slot tuple must satisfy
        // class(x - alpha_{perm(j)}) = M_a . class(x - alpha_j).
        let s = side();
        let f = &s.field;
        for a in [2u64, 3] {
            let m = s.galois_class_matrix(a);
            let perm = s.alpha_permutation(a);
            for xv in [0i64, -1] {
                let slots = s.slot_classes(&f.from_i64(xv)).unwrap();
                for j in 0..6 {
                    let lhs = slots[perm[j]].to_vec();
                    let rhs = m.mul_vec(&slots[j]);
                    assert_eq!(lhs, rhs, "a={a} x={xv} slot {j}");
                }
            }
        }
    }

    #[test]
    fn alpha_permutations_respect_the_two_families() {
        let s = side();
        for a in 1..=6u64 {
            let perm = s.alpha_permutation(a);
            for j in 0..3 {
                assert!(perm[j] < 3, "numerator family preserved");
            }
            for j in 3..6 {
                assert!(perm[j] >= 3, "denominator family preserved");
            }
        }
    }
}
