//! The full rank-bound pipeline: local image of the six listed points
//! under the Galois orbit (dimension 16), the kernel of the weighted norm,
//! the localization preimage, their intersection (dimension 10), and the
//! resulting bounds rank_O <= 6 over the cyclotomic field and
//! rank_Z <= 6 over Q.

use crate::cyclo::{cyclotomic_setup, CyclotomicData};
use crate::global_side::GlobalSide;
use crate::local_side::{LocalSide, XtError};
use seven_algebra::f7::F7Subspace;
use seven_padic::local::LocalElem;

/// Dimension of the pi-torsion of the Jacobian over the cyclotomic field,
/// consumed as published input (not recomputed here).
pub const DIM_J_PI_TORSION: usize = 4;

/// Expected dimension of J(k_pi)/pi J(k_pi): genus + pi-torsion dimension.
pub const EXPECTED_LOCAL_DIM: usize = 16;

#[derive(Clone, Debug)]
pub struct DescentReport {
    pub precision: usize,
    pub lambda_rank: usize,
    pub local_image_dim: usize,
    pub norm_kernel_dim: usize,
    pub localization_preimage_dim: usize,
    pub intersection_dim: usize,
    pub rank_bound_cyclotomic: usize,
    pub rank_bound_rational: usize,
    /// Classes of the points with rational x-coordinates land inside the
    /// cut-out global space (a consistency check on the chain).
    pub known_points_inside: bool,
}

#[derive(Debug)]
pub enum DescentError {
    Xt(XtError),
    /// The local image dimension differs from the expected 16; carries the
    /// matrices' dimensions for inspection.
    LocalImageDimension { got: usize },
}

impl std::fmt::Display for DescentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DescentError::Xt(e) => write!(f, "{e}"),
            DescentError::LocalImageDimension { got } => {
                write!(f, "local image dimension {got}, expected {EXPECTED_LOCAL_DIM}")
            }
        }
    }
}

impl std::error::Error for DescentError {}

impl From<XtError> for DescentError {
    fn from(e: XtError) -> Self {
        DescentError::Xt(e)
    }
}

/// Run the descent at the given pi-adic working precision with the six
/// x-coordinates (normally loaded from the data file).
pub fn run_descent(xs_digits: &[Vec<i64>], precision: usize) -> Result<DescentReport, DescentError> {
    let cyclo: CyclotomicData = cyclotomic_setup();
    let local = LocalSide::new(&cyclo, precision);
    let global = GlobalSide::new(&cyclo, &local);
    let xs: Vec<LocalElem> = xs_digits
        .iter()
        .map(|d| local.field.from_pi_digits(d))
        .collect();

    let image = local.local_image(&xs)?;
    if image.dim() != EXPECTED_LOCAL_DIM {
        return Err(DescentError::LocalImageDimension { got: image.dim() });
    }

    let norm_kernel = F7Subspace::from_kernel_of(&GlobalSide::norm_matrix());
    let loc_matrix = global.localization_matrix();
    let preimage = image.preimage_under(&loc_matrix);
    let intersection = norm_kernel.intersect(&preimage);

    // dim J(k)/pi J(k) <= intersection dim; subtract the pi-torsion
    // dimension for the O-rank bound, which also bounds the Z-rank of the
    // rational Mordell-Weil group.
    let rank_bound_cyclotomic = intersection.dim() - DIM_J_PI_TORSION;

    // Consistency: the classes of the points with rational x-coordinate
    // must land inside the intersection.
    let mut inside = true;
    for (p, q) in [(0i64, 1i64), (-1, 1), (1, 1), (2, 1), (1, 2)] {
        if let Some(v) = global.global_xt_class(&cyclo, &local, p, q) {
            if !intersection.contains(&v.coords) {
                inside = false;
            }
        } else {
            inside = false;
        }
    }

    Ok(DescentReport {
        precision,
        lambda_rank: global.lambda_rank(),
        local_image_dim: image.dim(),
        norm_kernel_dim: norm_kernel.dim(),
        localization_preimage_dim: preimage.dim(),
        intersection_dim: intersection.dim(),
        rank_bound_cyclotomic,
        rank_bound_rational: rank_bound_cyclotomic,
        known_points_inside: inside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{default_data_dir, parse_digit_lines};

    fn point_digits() -> Vec<Vec<i64>> {
        let text =
            std::fs::read_to_string(default_data_dir().join("local_points.txt")).unwrap();
        parse_digit_lines(&text).unwrap()
    }

    #[test]
    fn descent_dimensions_and_bounds() {
        let report = run_descent(&point_digits(), 120).unwrap();
        assert_eq!(report.lambda_rank, 4);
        assert_eq!(report.local_image_dim, 16);
        assert_eq!(report.norm_kernel_dim, 16);
        assert_eq!(report.intersection_dim, 10);
        assert_eq!(report.rank_bound_cyclotomic, 6);
        assert_eq!(report.rank_bound_rational, 6);
        assert!(report.known_points_inside);
    }

    #[test]
    fn dimensions_stable_at_doubled_precision() {
        let lo = run_descent(&point_digits(), 120).unwrap();
        let hi = run_descent(&point_digits(), 240).unwrap();
        assert_eq!(lo.local_image_dim, hi.local_image_dim);
        assert_eq!(lo.intersection_dim, hi.intersection_dim);
    }
}
