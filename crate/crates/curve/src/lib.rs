//! The genus-12 curve w^7 den(v) = z^7 num(v) in P^1 x P^1: point
//! enumeration and counting over finite fields, the order of the Jacobian
//! over F_13 through the genus-6 quotient, membership of the two
//! higher-degree algebraic points, divisors of the basis differentials,
//! local expansions, and the Chabauty certificate at 5.

pub mod algebraic;
pub mod chabauty;
pub mod data;
pub mod divisors;
pub mod expand;
pub mod points;
pub mod zeta;

pub use chabauty::{chabauty_verify, ChabautyReport};
pub use points::{count_points, enumerate_points, CPoint, Coord};
pub use zeta::{jacobian_order_13, ZetaError, ZetaReport};
