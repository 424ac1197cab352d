//! The unit-class descent over Q(zeta_7) bounding the Mordell-Weil rank of
//! the Jacobian of the genus-12 cover: global and local class spaces
//! modulo 7th powers and modulo the diagonal, the coordinate map
//! P |-> (x(P) - alpha_1, ..., x(P) - alpha_6), the weighted norm, the
//! localization, and the dimension count giving rank <= 6.

pub mod cyclo;
pub mod data;
pub mod global_side;
pub mod local_side;
pub mod pipeline;
pub mod search;
pub mod velement;

pub use pipeline::{run_descent, DescentError, DescentReport};
