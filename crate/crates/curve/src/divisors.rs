//! Formal divisor bookkeeping on the named divisors of the curve:
//! D_0, D_1, D_inf (the fibers over v = 0, 1, infinity; degree 7 each) and
//! G_1, G_2 (the w = 0 and w = infinity loci; degree 3 each), with
//!
//!   (v) = D_0 - D_inf,  (w) = G_1 - G_2,  (den(v)) = 7 G_2 - 3 D_inf,
//!   (dv) = 6 G_1 + 6 G_2 - 2 D_inf,
//!
//! giving (w_ij) = i D_0 + (1-i) D_inf + j G_1 + (5-j) G_2 for the basis
//! differentials w_ij = v^i w^j / (den(v) w^6) dv.

use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Symbol {
    D0,
    D1,
    DInf,
    G1,
    G2,
}

impl Symbol {
    pub fn degree(self) -> i64 {
        match self {
            Symbol::D0 | Symbol::D1 | Symbol::DInf => 7,
            Symbol::G1 | Symbol::G2 => 3,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicDivisor {
    pub coeffs: BTreeMap<Symbol, i64>,
}

impl SymbolicDivisor {
    pub fn of(parts: &[(Symbol, i64)]) -> Self {
        let mut d = SymbolicDivisor::default();
        for &(s, c) in parts {
            d.add_part(s, c);
        }
        d
    }

    pub fn add_part(&mut self, s: Symbol, c: i64) {
        let e = self.coeffs.entry(s).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&s);
        }
    }

    pub fn plus(&self, rhs: &SymbolicDivisor) -> SymbolicDivisor {
        let mut out = self.clone();
        for (&s, &c) in &rhs.coeffs {
            out.add_part(s, c);
        }
        out
    }

    pub fn scaled(&self, n: i64) -> SymbolicDivisor {
        let mut out = SymbolicDivisor::default();
        for (&s, &c) in &self.coeffs {
            out.add_part(s, c * n);
        }
        out
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.iter().map(|(s, c)| s.degree() * c).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }
}

pub fn div_v() -> SymbolicDivisor {
    SymbolicDivisor::of(&[(Symbol::D0, 1), (Symbol::DInf, -1)])
}

pub fn div_w() -> SymbolicDivisor {
    SymbolicDivisor::of(&[(Symbol::G1, 1), (Symbol::G2, -1)])
}

pub fn div_den() -> SymbolicDivisor {
    SymbolicDivisor::of(&[(Symbol::G2, 7), (Symbol::DInf, -3)])
}

pub fn div_dv() -> SymbolicDivisor {
    SymbolicDivisor::of(&[(Symbol::G1, 6), (Symbol::G2, 6), (Symbol::DInf, -2)])
}

/// Divisor of w_ij, assembled from the building blocks:
/// i (v) + (j - 6)(w) - (den) + (dv).
pub fn differential_divisor(i: i64, j: i64) -> SymbolicDivisor {
    assert!((0..=1).contains(&i) && (0..=5).contains(&j), "basis range");
    div_v()
        .scaled(i)
        .plus(&div_w().scaled(j - 6))
        .plus(&div_den().scaled(-1))
        .plus(&div_dv())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_and_degree_22() {
        for i in 0..=1i64 {
            for j in 0..=5i64 {
                let d = differential_divisor(i, j);
                let expected = SymbolicDivisor::of(&[
                    (Symbol::D0, i),
                    (Symbol::DInf, 1 - i),
                    (Symbol::G1, j),
                    (Symbol::G2, 5 - j),
                ]);
                assert_eq!(d, expected, "(i,j) = ({i},{j})");
                assert_eq!(d.degree(), 22);
                assert!(d.is_effective());
            }
        }
    }

    #[test]
    fn named_instances() {
        // (w00) = D_inf + 5 G_2, degree 7 + 15 = 22.
        let w00 = differential_divisor(0, 0);
        assert_eq!(
            w00,
            SymbolicDivisor::of(&[(Symbol::DInf, 1), (Symbol::G2, 5)])
        );
        // (w15) = D_0 + 5 G_1, effective.
        let w15 = differential_divisor(1, 5);
        assert_eq!(
            w15,
            SymbolicDivisor::of(&[(Symbol::D0, 1), (Symbol::G1, 5)])
        );
        // canonical degree 2g - 2 = 22 certifies the genus bookkeeping.
        assert_eq!(div_dv().degree(), 22);
    }

    #[test]
    #[should_panic]
    fn out_of_range_rejected() {
        let _ = differential_divisor(2, 0);
    }
}
