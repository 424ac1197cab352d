//! Points of the projective line over Q.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProjQ {
    Finite(BigRational),
    Infinity,
}

impl ProjQ {
    pub fn from_i64(n: i64) -> Self {
        ProjQ::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        if d == 0 {
            ProjQ::Infinity
        } else {
            ProjQ::Finite(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ProjQ::Finite(v) => Some(v),
            ProjQ::Infinity => None,
        }
    }

    /// eta(v) = 1/(1 - v).
    pub fn eta(&self) -> ProjQ {
        match self {
            ProjQ::Infinity => ProjQ::Finite(BigRational::zero()),
            ProjQ::Finite(v) => {
                let one = BigRational::one();
                if *v == one {
                    ProjQ::Infinity
                } else {
                    ProjQ::Finite((&one - v).recip())
                }
            }
        }
    }

    /// tau(v) = 1 - v.
    pub fn tau(&self) -> ProjQ {
        match self {
            ProjQ::Infinity => ProjQ::Infinity,
            ProjQ::Finite(v) => ProjQ::Finite(&BigRational::one() - v),
        }
    }
}

impl std::fmt::Display for ProjQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProjQ::Finite(v) => write!(f, "{v}"),
            ProjQ::Infinity => write!(f, "inf"),
        }
    }
}
