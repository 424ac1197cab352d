//! Prime-power finite fields F_{p^k} with a fixed per-(p, k) modulus.
//!
//! The modulus is the lexicographically smallest monic irreducible of degree
//! k over F_p (comparing the coefficient tuple from the highest non-leading
//! coefficient down), found once per process and cached, so runs are
//! reproducible.  Elements are inline coefficient arrays; no allocation in
//! the arithmetic kernels, which matters for the multi-million element
//! counting loops.

use crate::poly::PolyRing;
use crate::ring::{Field, Fp, Ring};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub const FQ_MAX_DEG: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct FqEl {
    pub c: [u64; FQ_MAX_DEG],
}

impl std::fmt::Debug for FqEl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.c)
    }
}

#[derive(Clone, Debug)]
pub struct Fq {
    p: u64,
    k: usize,
    /// Non-leading coefficients of the monic modulus, ascending (length k).
    modulus: Vec<u64>,
    /// x^(k+i) reduced mod the modulus, for i in 0..k-1.
    red_rows: Vec<[u64; FQ_MAX_DEG]>,
}

static MODULUS_REGISTRY: OnceLock<Mutex<HashMap<(u64, usize), Vec<u64>>>> = OnceLock::new();

/// The fixed modulus for (p, k), as non-leading coefficients ascending.
pub fn registered_modulus(p: u64, k: usize) -> Vec<u64> {
    let reg = MODULUS_REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = reg.lock().unwrap();
    if let Some(m) = guard.get(&(p, k)) {
        return m.clone();
    }
    let m = find_lex_smallest_irreducible(p, k);
    guard.insert((p, k), m.clone());
    m
}

/// All moduli chosen so far, for reporting.
pub fn registry_snapshot() -> Vec<((u64, usize), Vec<u64>)> {
    let reg = MODULUS_REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let guard = reg.lock().unwrap();
    let mut out: Vec<_> = guard.iter().map(|(k, v)| (*k, v.clone())).collect();
    out.sort();
    out
}

fn find_lex_smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    assert!(k >= 1 && k <= FQ_MAX_DEG);
    if k == 1 {
        // x itself; F_p needs no extension data.
        return vec![0];
    }
    let fp = Fp::new(p);
    let pr = PolyRing::new(fp);
    let total = p.pow(k as u32);
    for m in 0..total {
        // Digits of m in base p, most significant digit = coefficient of
        // x^(k-1): ascending m enumerates coefficient tuples
        // (c_{k-1}, ..., c_0) in lexicographic order.
        let mut digits = vec![0u64; k];
        let mut mm = m;
        for i in 0..k {
            digits[i] = mm % p; // digits[0] = c_0
            mm /= p;
        }
        let mut coeffs = digits.clone();
        coeffs.push(1);
        let f = pr.poly(coeffs);
        if poly_is_irreducible(&pr, &f, p, k) {
            return digits;
        }
    }
    unreachable!("irreducible polynomial of degree {k} over F_{p} exists");
}

fn poly_is_irreducible(pr: &PolyRing<Fp>, f: &crate::poly::Poly<u64>, p: u64, k: usize) -> bool {
    // f (monic, degree k) is irreducible over F_p iff x^(p^k) = x mod f and
    // gcd(x^(p^(k/l)) - x, f) = 1 for every prime l dividing k.
    let x = pr.var();
    let xq = poly_pow_pow_p(pr, &x, f, p, k as u32);
    if !pr.eq_poly(&xq, &pr.rem(&x, f).unwrap()) {
        return false;
    }
    let mut primes = vec![];
    let mut kk = k;
    let mut d = 2;
    while d * d <= kk {
        if kk % d == 0 {
            primes.push(d);
            while kk % d == 0 {
                kk /= d;
            }
        }
        d += 1;
    }
    if kk > 1 {
        primes.push(kk);
    }
    for l in primes {
        let e = (k / l) as u32;
        let xe = poly_pow_pow_p(pr, &x, f, p, e);
        let diff = pr.sub_poly(&xe, &x);
        let g = pr.gcd(&diff, f);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

/// x |-> x^(p^e) mod f by iterated p-th powers.
fn poly_pow_pow_p(
    pr: &PolyRing<Fp>,
    x: &crate::poly::Poly<u64>,
    f: &crate::poly::Poly<u64>,
    p: u64,
    e: u32,
) -> crate::poly::Poly<u64> {
    let mut acc = pr.rem(x, f).unwrap();
    for _ in 0..e {
        acc = poly_powmod(pr, &acc, p, f);
    }
    acc
}

fn poly_powmod(
    pr: &PolyRing<Fp>,
    a: &crate::poly::Poly<u64>,
    mut e: u64,
    f: &crate::poly::Poly<u64>,
) -> crate::poly::Poly<u64> {
    let mut acc = pr.one();
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = pr.rem(&pr.mul_poly(&acc, &base), f).unwrap();
        }
        e >>= 1;
        if e > 0 {
            base = pr.rem(&pr.mul_poly(&base, &base), f).unwrap();
        }
    }
    acc
}

impl Fq {
    pub fn new(p: u64, k: usize) -> Self {
        assert!(crate::arith::is_prime_u64(p));
        assert!(k >= 1 && k <= FQ_MAX_DEG);
        assert!(p < (1 << 31), "coefficient prime too large");
        let modulus = if k == 1 { vec![0] } else { registered_modulus(p, k) };
        // Precompute x^(k+i) mod f for schoolbook reduction.
        let mut red_rows: Vec<[u64; FQ_MAX_DEG]> = Vec::new();
        if k > 1 {
            // row 0: x^k = -modulus (non-leading part).
            let mut row = [0u64; FQ_MAX_DEG];
            for (i, &c) in modulus.iter().enumerate() {
                row[i] = (p - c % p) % p;
            }
            red_rows.push(row);
            for _ in 1..k {
                let prev = *red_rows.last().unwrap();
                let mut next = [0u64; FQ_MAX_DEG];
                // multiply prev by x, then reduce the x^k term.
                let top = prev[k - 1];
                for i in (1..k).rev() {
                    next[i] = prev[i - 1];
                }
                next[0] = 0;
                if top != 0 {
                    let first = red_rows[0];
                    for i in 0..k {
                        let t = (top as u128 * first[i] as u128) % p as u128;
                        next[i] = ((next[i] as u128 + t) % p as u128) as u64;
                    }
                }
                red_rows.push(next);
            }
        }
        Fq {
            p,
            k,
            modulus,
            red_rows,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    /// Modulus as non-leading coefficients, ascending.
    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    pub fn el_from_coeffs(&self, coeffs: &[u64]) -> FqEl {
        assert!(coeffs.len() <= self.k);
        let mut c = [0u64; FQ_MAX_DEG];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.p;
        }
        FqEl { c }
    }

    /// The element whose coefficient vector is the base-p digits of idx.
    pub fn el_from_index(&self, mut idx: u64) -> FqEl {
        let mut c = [0u64; FQ_MAX_DEG];
        for slot in c.iter_mut().take(self.k) {
            *slot = idx % self.p;
            idx /= self.p;
        }
        FqEl { c }
    }

    fn reduce_wide(&self, wide: &mut [u128; 2 * FQ_MAX_DEG]) -> FqEl {
        let p = self.p as u128;
        // Fold x^(k+i) terms down using the precomputed rows.
        for i in (self.k..2 * self.k - 1).rev() {
            let t = wide[i] % p;
            if t == 0 {
                continue;
            }
            let row = &self.red_rows[i - self.k];
            for j in 0..self.k {
                wide[j] += t * row[j] as u128;
            }
        }
        let mut c = [0u64; FQ_MAX_DEG];
        for j in 0..self.k {
            c[j] = (wide[j] % p) as u64;
        }
        FqEl { c }
    }
}

impl Ring for Fq {
    type El = FqEl;

    fn zero(&self) -> FqEl {
        FqEl {
            c: [0; FQ_MAX_DEG],
        }
    }
    fn one(&self) -> FqEl {
        let mut c = [0u64; FQ_MAX_DEG];
        c[0] = 1 % self.p;
        FqEl { c }
    }
    fn from_i64(&self, n: i64) -> FqEl {
        let mut c = [0u64; FQ_MAX_DEG];
        c[0] = n.rem_euclid(self.p as i64) as u64;
        FqEl { c }
    }
    fn add(&self, a: &FqEl, b: &FqEl) -> FqEl {
        let mut c = [0u64; FQ_MAX_DEG];
        for i in 0..self.k {
            c[i] = (a.c[i] + b.c[i]) % self.p;
        }
        FqEl { c }
    }
    fn neg(&self, a: &FqEl) -> FqEl {
        let mut c = [0u64; FQ_MAX_DEG];
        for i in 0..self.k {
            c[i] = (self.p - a.c[i]) % self.p;
        }
        FqEl { c }
    }
    fn mul(&self, a: &FqEl, b: &FqEl) -> FqEl {
        let mut wide = [0u128; 2 * FQ_MAX_DEG];
        for i in 0..self.k {
            if a.c[i] == 0 {
                continue;
            }
            let ai = a.c[i] as u128;
            for j in 0..self.k {
                wide[i + j] += ai * b.c[j] as u128;
            }
        }
        self.reduce_wide(&mut wide)
    }
    fn eq_el(&self, a: &FqEl, b: &FqEl) -> bool {
        a.c[..self.k] == b.c[..self.k]
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn fmt_el(&self, a: &FqEl) -> String {
        format!("{:?}", &a.c[..self.k])
    }
}

impl Field for Fq {
    fn inv(&self, a: &FqEl) -> Option<FqEl> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow_u64(a, self.size() - 2))
    }
}
