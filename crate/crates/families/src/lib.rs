//! The explicit curve families with a rational 7-isogeny: the universal
//! curve E_u with a 7-torsion point, the twisted families A_v and A_v^(d)
//! for a prescribed kernel character, their specialization B_v to the
//! quintic-power cyclotomic character over Q, minimal discriminants and the
//! 7-adic valuation table, the 7-isogeny B_v -> B'_v, the CM fibers, and
//! the exceptionality predicate.

pub mod av;
pub mod bv;
pub mod eu;
pub mod exceptional;
pub mod identities;
pub mod isog;
pub mod jcm;
pub mod lcw;
pub mod projq;
pub mod s3;
pub mod table;

pub use projq::ProjQ;
