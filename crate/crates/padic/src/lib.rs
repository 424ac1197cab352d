//! 7-adic arithmetic in Z_7 and in the totally ramified degree-6 extension
//! Q_7(zeta_7), with explicit precision tracking: 7th roots, unit classes
//! modulo 7th powers, the local Galois action, and local solvability scans
//! for the twisted degree-7 covers.

pub mod cj;
pub mod local;
pub mod roots;
pub mod units;
pub mod zp;

pub use cj::{local_solvability, CjVerdict};
pub use local::{LocalElem, LocalField, LocalFieldError};
pub use roots::{lift_point_on_x, seventh_root, seventh_root_canonical, RootError};
pub use units::{unit_class_decompose, UnitClassError, UnitClassVector};
pub use zp::PadicInt;
