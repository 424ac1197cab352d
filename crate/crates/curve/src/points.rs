//! Points of the nonsingular model C in P^1 x P^1 over finite fields:
//!
//!   w^7 (v^3 - v^2 u - 2v u^2 + u^3) = z^7 (v^3 - 2v^2 u - v u^2 + u^3),
//!
//! affinely w^7 = num(v)/den(v).  Over each v in P^1(F_q): a root of num
//! contributes the single point (v, 0), a root of den the single point
//! (v, infinity) (num and den are coprime over every field); otherwise the
//! fiber has a unique point when 7 does not divide q - 1, and 7 or 0
//! points when it does, decided by the (q-1)/7 power residue test.

use rayon::prelude::*;
use seven_algebra::cubics;
use seven_algebra::finite::{Fq, FqEl};
use seven_algebra::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coord<T> {
    Finite(T),
    Infinity,
}

impl<T> Coord<T> {
    pub fn finite(&self) -> Option<&T> {
        match self {
            Coord::Finite(t) => Some(t),
            Coord::Infinity => None,
        }
    }
}

/// A point of C, coordinates normalized (first nonzero projective entry 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CPoint<T> {
    pub v: Coord<T>,
    pub w: Coord<T>,
}

fn eval_num(field: &Fq, v: &FqEl) -> FqEl {
    horner(field, &cubics::NUM_CUBIC, v)
}

fn eval_den(field: &Fq, v: &FqEl) -> FqEl {
    horner(field, &cubics::DEN_CUBIC, v)
}

fn horner(field: &Fq, coeffs: &[i64; 4], x: &FqEl) -> FqEl {
    let mut acc = field.zero();
    for &c in coeffs.iter().rev() {
        acc = field.add(&field.mul(&acc, x), &field.from_i64(c));
    }
    acc
}

/// Verify the bihomogeneous equation for a point.
pub fn on_curve(field: &Fq, p: &CPoint<FqEl>) -> bool {
    // Use (v:u) and (w:z) representatives.
    let (v, u) = match &p.v {
        Coord::Finite(v) => (v.clone(), field.one()),
        Coord::Infinity => (field.one(), field.zero()),
    };
    let (w, z) = match &p.w {
        Coord::Finite(w) => (w.clone(), field.one()),
        Coord::Infinity => (field.one(), field.zero()),
    };
    // num_h(v, u) = v^3 - 2 v^2 u - v u^2 + u^3, den_h likewise.
    let hom = |coeffs: &[i64; 4]| -> FqEl {
        let mut acc = field.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            // coefficient of v^i u^(3-i)
            let term = field.mul(
                &field.pow_u64(&v, i as u64),
                &field.pow_u64(&u, (3 - i) as u64),
            );
            acc = field.add(&acc, &field.mul(&field.from_i64(c), &term));
        }
        acc
    };
    let num_h = hom(&cubics::NUM_CUBIC);
    let den_h = hom(&cubics::DEN_CUBIC);
    let lhs = field.mul(&field.pow_u64(&w, 7), &den_h);
    let rhs = field.mul(&field.pow_u64(&z, 7), &num_h);
    field.eq_el(&lhs, &rhs)
}

/// Materialize C(F_q).  Intended for q small enough to hold the list.
pub fn enumerate_points(field: &Fq) -> Vec<CPoint<FqEl>> {
    let q = field.size();
    let seventh_roots_exist = (q - 1) % 7 == 0;
    let mut roots_of: std::collections::HashMap<Vec<u64>, Vec<FqEl>> = std::collections::HashMap::new();
    if seventh_roots_exist {
        for idx in 0..q {
            let w = field.el_from_index(idx);
            if field.is_zero(&w) {
                continue;
            }
            let key = field.pow_u64(&w, 7).c[..field.k()].to_vec();
            roots_of.entry(key).or_default().push(w);
        }
    }
    let inv_exp = if seventh_roots_exist {
        0
    } else {
        // 7 s = 1 mod (q-1): w = g^s is the unique 7th root of g.
        let mut s = 0u64;
        while (7 * s) % (q - 1) != 1 % (q - 1) {
            s += 1;
        }
        s
    };
    let mut out = Vec::new();
    let mut fiber = |vc: Coord<FqEl>, num: FqEl, den: FqEl| {
        if field.is_zero(&num) {
            out.push(CPoint {
                v: vc,
                w: Coord::Finite(field.zero()),
            });
        } else if field.is_zero(&den) {
            out.push(CPoint {
                v: vc,
                w: Coord::Infinity,
            });
        } else {
            let g = field.div(&num, &den).unwrap();
            if seventh_roots_exist {
                let key = g.c[..field.k()].to_vec();
                if let Some(ws) = roots_of.get(&key) {
                    for w in ws {
                        out.push(CPoint {
                            v: vc.clone(),
                            w: Coord::Finite(w.clone()),
                        });
                    }
                }
            } else {
                let w = field.pow_u64(&g, inv_exp);
                debug_assert!(field.eq_el(&field.pow_u64(&w, 7), &g));
                out.push(CPoint {
                    v: vc,
                    w: Coord::Finite(w),
                });
            }
        }
    };
    for idx in 0..q {
        let v = field.el_from_index(idx);
        fiber(
            Coord::Finite(v.clone()),
            eval_num(field, &v),
            eval_den(field, &v),
        );
    }
    // v = infinity: num/den -> leading coefficients 1/1.
    fiber(Coord::Infinity, field.one(), field.one());
    out
}

/// #C(F_q) without materializing points; parallel over the v-line.
pub fn count_points(field: &Fq) -> u64 {
    let q = field.size();
    let seventh = (q - 1) % 7 == 0;
    let residue_exp = if seventh { (q - 1) / 7 } else { 0 };
    let chunk = 1u64 << 14;
    let ranges: Vec<(u64, u64)> = (0..q)
        .step_by(chunk as usize)
        .map(|s| (s, (s + chunk).min(q)))
        .collect();
    let total: u64 = ranges
        .par_iter()
        .map(|&(lo, hi)| {
            let mut acc = 0u64;
            for idx in lo..hi {
                let v = field.el_from_index(idx);
                let num = eval_num(field, &v);
                let den = eval_den(field, &v);
                if field.is_zero(&num) || field.is_zero(&den) {
                    acc += 1;
                } else if !seventh {
                    acc += 1;
                } else {
                    // g = num/den is a 7th power iff h = num den^6 is.
                    let den2 = field.mul(&den, &den);
                    let den6 = field.mul(&field.mul(&den2, &den2), &den2);
                    let h = field.mul(&num, &den6);
                    if field.is_one(&field.pow_u64(&h, residue_exp)) {
                        acc += 7;
                    }
                }
            }
            acc
        })
        .sum();
    // fiber at v = infinity: g = 1.
    total + if seventh { 7 } else { 1 }
}

/// The coordinatewise involutions generating the S3 action:
/// sigma (v, w) = (1/v, 1/w) and tau (v, w) = (1 - v, 1/w).
pub fn apply_sigma(field: &Fq, p: &CPoint<FqEl>) -> CPoint<FqEl> {
    CPoint {
        v: coord_inv(field, &p.v),
        w: coord_inv(field, &p.w),
    }
}

pub fn apply_tau(field: &Fq, p: &CPoint<FqEl>) -> CPoint<FqEl> {
    let v = match &p.v {
        Coord::Finite(v) => Coord::Finite(field.sub(&field.one(), v)),
        Coord::Infinity => Coord::Infinity,
    };
    CPoint {
        v,
        w: coord_inv(field, &p.w),
    }
}

fn coord_inv(field: &Fq, c: &Coord<FqEl>) -> Coord<FqEl> {
    match c {
        Coord::Infinity => Coord::Finite(field.zero()),
        Coord::Finite(x) => {
            if field.is_zero(x) {
                Coord::Infinity
            } else {
                Coord::Finite(field.inv(x).unwrap())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_keys(field: &Fq, pts: &[CPoint<FqEl>]) -> Vec<(Vec<u64>, Vec<u64>)> {
        let key = |c: &Coord<FqEl>| match c {
            Coord::Infinity => vec![u64::MAX],
            Coord::Finite(x) => x.c[..field.k()].to_vec(),
        };
        let mut out: Vec<_> = pts.iter().map(|p| (key(&p.v), key(&p.w))).collect();
        out.sort();
        out
    }

    #[test]
    fn f5_has_exactly_the_six_expected_points() {
        let f5 = Fq::new(5, 1);
        let pts = enumerate_points(&f5);
        assert_eq!(pts.len(), 6);
        for p in &pts {
            assert!(on_curve(&f5, p));
        }
        // (0,1), (1,1), (2,4), (3,4), (4,4), (inf,1)
        let expected: Vec<(Vec<u64>, Vec<u64>)> = vec![
            (vec![0], vec![1]),
            (vec![1], vec![1]),
            (vec![2], vec![4]),
            (vec![3], vec![4]),
            (vec![4], vec![4]),
            (vec![u64::MAX], vec![1]),
        ];
        let mut exp = expected;
        exp.sort();
        assert_eq!(sorted_keys(&f5, &pts), exp);
    }

    #[test]
    fn f2_has_three_points() {
        let f2 = Fq::new(2, 1);
        let pts = enumerate_points(&f2);
        assert_eq!(pts.len(), 3);
        for p in &pts {
            assert!(on_curve(&f2, p));
            // all have w = 1 (num and den are irreducible over F_2)
            assert_eq!(p.w.finite().map(|x| x.c[0]), Some(1));
        }
    }

    #[test]
    fn count_agrees_with_enumeration() {
        for (p, k) in [(2u64, 1usize), (5, 1), (13, 1), (13, 2), (13, 3), (5, 2)] {
            let f = Fq::new(p, k);
            assert_eq!(
                count_points(&f) as usize,
                enumerate_points(&f).len(),
                "q = {p}^{k}"
            );
        }
    }

    #[test]
    fn s3_action_permutes_points() {
        for (p, k) in [(2u64, 1usize), (5, 1), (13, 1)] {
            let f = Fq::new(p, k);
            let pts = enumerate_points(&f);
            let base = sorted_keys(&f, &pts);
            let sig: Vec<CPoint<FqEl>> = pts.iter().map(|q| apply_sigma(&f, q)).collect();
            let tau: Vec<CPoint<FqEl>> = pts.iter().map(|q| apply_tau(&f, q)).collect();
            for q in sig.iter().chain(tau.iter()) {
                assert!(on_curve(&f, q));
            }
            assert_eq!(sorted_keys(&f, &sig), base);
            assert_eq!(sorted_keys(&f, &tau), base);
        }
    }

    #[test]
    fn f13_count_is_fourteen() {
        let f13 = Fq::new(13, 1);
        assert_eq!(count_points(&f13), 14);
        // 7 does not divide 12, so every fiber has exactly one point and
        // num/den each split (13 = -1 mod 7): three w = 0 and three
        // w = infinity points.
        let pts = enumerate_points(&f13);
        let zeros = pts
            .iter()
            .filter(|p| p.w.finite().map_or(false, |x| x.c[0] == 0))
            .count();
        let infs = pts.iter().filter(|p| p.w == Coord::Infinity).count();
        assert_eq!((zeros, infs), (3, 3));
    }
}
