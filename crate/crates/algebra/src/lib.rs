//! Exact arithmetic substrate: arbitrary-precision rationals, dense
//! univariate polynomials over a generic field, quotient rings, prime-power
//! finite fields, truncated power series, and linear algebra over F7.
//!
//! Rings are represented as context objects (the `Ring`/`Field` traits) whose
//! associated `El` type carries the element data.  This keeps contextual
//! structures such as `Q[x]/(m)` or `F_{p^k}` usable through the same generic
//! code paths as `Q` itself.

pub mod arith;
pub mod cubics;
pub mod f7;
pub mod finite;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod rng;
pub mod series;

pub use arith::{ord_p, ord_p_int, PadicOrder};
pub use f7::{F7Subspace, MatF7};
pub use finite::{Fq, FqEl};
pub use poly::{Poly, PolyRing};
pub use quotient::QuotientRing;
pub use ring::{Field, Fp, Rationals, Ring};
pub use series::{NewtonError, PowerSeries, SeriesError};

use num_rational::BigRational;

/// Arbitrary-precision rational scalar used throughout the workspace.
pub type Rat = BigRational;

/// Dense univariate polynomial with rational coefficients.
pub type RatPoly = Poly<Rat>;
