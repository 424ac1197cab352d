//! Long Weierstrass models over a generic coefficient ring: invariants,
//! the group law, isomorphisms and quadratic twists, degree-7 isogenies by
//! kernel polynomial, a sufficient minimality criterion, and Frobenius data
//! for curves over small finite fields.

pub mod frobenius;
pub mod isomorphism;
pub mod minimality;
pub mod model;
pub mod point;
pub mod velu;

pub use frobenius::{enumerate_f2_models, frobenius_data_mod7, F2Classification, FrobeniusData};
pub use isomorphism::{q_isomorphic, IsoData, QIsoError};
pub use minimality::{minimality_at_p, Minimality, MinimalityError};
pub use model::{Invariants, ModelError, WeierstrassModel};
pub use point::Point;
pub use velu::{division_poly_7, velu_isogeny, Isogeny, VeluError};
