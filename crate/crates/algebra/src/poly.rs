//! Dense univariate polynomials over a generic ring.
//!
//! `Poly<T>` is plain coefficient storage, ascending degree, trailing
//! coefficient nonzero (the zero polynomial is the empty vector).  All
//! arithmetic goes through `PolyRing<R>`, which carries the coefficient ring.

use crate::arith::{factor_biguint, FactorError};
use crate::ring::{Field, Rationals, Ring};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    pub coeffs: Vec<T>,
}

impl<T> Poly<T> {
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

/// Polynomial ring R[x] over a coefficient ring context.
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    /// Build a polynomial from coefficients (ascending), trimming trailing
    /// zeros.
    pub fn poly(&self, coeffs: Vec<R::El>) -> Poly<R::El> {
        let mut coeffs = coeffs;
        while let Some(c) = coeffs.last() {
            if self.base.is_zero(c) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { coeffs }
    }

    pub fn from_i64_coeffs(&self, coeffs: &[i64]) -> Poly<R::El> {
        self.poly(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn constant(&self, c: R::El) -> Poly<R::El> {
        self.poly(vec![c])
    }

    pub fn var(&self) -> Poly<R::El> {
        self.poly(vec![self.base.zero(), self.base.one()])
    }

    pub fn coeff(&self, f: &Poly<R::El>, i: usize) -> R::El {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn add_poly(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> Poly<R::El> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.base.add(&self.coeff(a, i), &self.coeff(b, i)));
        }
        self.poly(out)
    }

    pub fn neg_poly(&self, a: &Poly<R::El>) -> Poly<R::El> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    pub fn sub_poly(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> Poly<R::El> {
        self.add_poly(a, &self.neg_poly(b))
    }

    pub fn mul_poly(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> Poly<R::El> {
        if a.is_zero_poly() || b.is_zero_poly() {
            return Poly { coeffs: vec![] };
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(ai, bj));
            }
        }
        self.poly(out)
    }

    pub fn scale(&self, c: &R::El, a: &Poly<R::El>) -> Poly<R::El> {
        self.poly(a.coeffs.iter().map(|x| self.base.mul(c, x)).collect())
    }

    pub fn pow_poly(&self, a: &Poly<R::El>, e: u64) -> Poly<R::El> {
        let mut acc = self.constant(self.base.one());
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_poly(&base, &base);
            }
        }
        acc
    }

    pub fn eval(&self, f: &Poly<R::El>, x: &R::El) -> R::El {
        let mut acc = self.base.zero();
        for c in f.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, x), c);
        }
        acc
    }

    /// Evaluate with coefficients mapped into another ring through `embed`.
    pub fn eval_in<S: Ring>(
        &self,
        f: &Poly<R::El>,
        target: &S,
        embed: impl Fn(&R::El) -> S::El,
        x: &S::El,
    ) -> S::El {
        let mut acc = target.zero();
        for c in f.coeffs.iter().rev() {
            acc = target.add(&target.mul(&acc, x), &embed(c));
        }
        acc
    }

    pub fn derivative(&self, f: &Poly<R::El>) -> Poly<R::El> {
        if f.coeffs.len() <= 1 {
            return Poly { coeffs: vec![] };
        }
        let mut out = Vec::with_capacity(f.coeffs.len() - 1);
        for (i, c) in f.coeffs.iter().enumerate().skip(1) {
            out.push(self.base.mul(&self.base.from_i64(i as i64), c));
        }
        self.poly(out)
    }

    pub fn compose(&self, f: &Poly<R::El>, g: &Poly<R::El>) -> Poly<R::El> {
        let mut acc = Poly { coeffs: vec![] };
        for c in f.coeffs.iter().rev() {
            acc = self.mul_poly(&acc, g);
            acc = self.add_poly(&acc, &self.constant(c.clone()));
        }
        acc
    }

    pub fn eq_poly(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> bool {
        if a.coeffs.len() != b.coeffs.len() {
            return false;
        }
        a.coeffs
            .iter()
            .zip(&b.coeffs)
            .all(|(x, y)| self.base.eq_el(x, y))
    }

    /// Reverse of the coefficient list padded to the given degree:
    /// x^deg * f(1/x).
    pub fn reverse(&self, f: &Poly<R::El>, deg: usize) -> Poly<R::El> {
        let mut out = vec![self.base.zero(); deg + 1];
        for (i, c) in f.coeffs.iter().enumerate() {
            assert!(i <= deg);
            out[deg - i] = c.clone();
        }
        self.poly(out)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type El = Poly<R::El>;

    fn zero(&self) -> Poly<R::El> {
        Poly { coeffs: vec![] }
    }
    fn one(&self) -> Poly<R::El> {
        self.constant(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Poly<R::El> {
        self.constant(self.base.from_i64(n))
    }
    fn add(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> Poly<R::El> {
        self.add_poly(a, b)
    }
    fn neg(&self, a: &Poly<R::El>) -> Poly<R::El> {
        self.neg_poly(a)
    }
    fn mul(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> Poly<R::El> {
        self.mul_poly(a, b)
    }
    fn eq_el(&self, a: &Poly<R::El>, b: &Poly<R::El>) -> bool {
        self.eq_poly(a, b)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn fmt_el(&self, a: &Poly<R::El>) -> String {
        if a.coeffs.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| match i {
                0 => self.base.fmt_el(c),
                1 => format!("{}*x", self.base.fmt_el(c)),
                _ => format!("{}*x^{}", self.base.fmt_el(c), i),
            })
            .collect();
        terms.join(" + ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyError {
    DivisionByZero,
    BothZero,
}

impl std::fmt::Display for PolyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
            PolyError::BothZero => write!(f, "resultant of two zero polynomials"),
        }
    }
}

impl std::error::Error for PolyError {}

impl<F: Field> PolyRing<F> {
    pub fn div_rem(
        &self,
        a: &Poly<F::El>,
        b: &Poly<F::El>,
    ) -> Result<(Poly<F::El>, Poly<F::El>), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let lb_inv = self
            .base
            .inv(b.leading().unwrap())
            .ok_or(PolyError::DivisionByZero)?;
        let mut rem = a.coeffs.clone();
        if rem.len() < db + 1 {
            return Ok((Poly { coeffs: vec![] }, a.clone()));
        }
        let dq = rem.len() - 1 - db;
        let mut quo = vec![self.base.zero(); dq + 1];
        for i in (0..=dq).rev() {
            let top = rem[i + db].clone();
            if self.base.is_zero(&top) {
                continue;
            }
            let q = self.base.mul(&top, &lb_inv);
            quo[i] = q.clone();
            for j in 0..=db {
                let t = self.base.mul(&q, &b.coeffs[j]);
                rem[i + j] = self.base.sub(&rem[i + j], &t);
            }
        }
        Ok((self.poly(quo), self.poly(rem)))
    }

    pub fn rem(&self, a: &Poly<F::El>, b: &Poly<F::El>) -> Result<Poly<F::El>, PolyError> {
        Ok(self.div_rem(a, b)?.1)
    }

    pub fn monic(&self, a: &Poly<F::El>) -> Poly<F::El> {
        match a.leading() {
            None => a.clone(),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("leading coefficient not a unit");
                self.scale(&inv, a)
            }
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &Poly<F::El>, b: &Poly<F::El>) -> Poly<F::El> {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero_poly() {
            let r = self.rem(&a, &b).unwrap();
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
    pub fn xgcd(
        &self,
        a: &Poly<F::El>,
        b: &Poly<F::El>,
    ) -> (Poly<F::El>, Poly<F::El>, Poly<F::El>) {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut s0 = self.one();
        let mut s1 = self.zero();
        let mut t0 = self.zero();
        let mut t1 = self.one();
        while !r1.is_zero_poly() {
            let (q, r) = self.div_rem(&r0, &r1).unwrap();
            let s = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if let Some(lc) = r0.leading() {
            let inv = self.base.inv(lc).unwrap();
            return (
                self.scale(&inv, &r0),
                self.scale(&inv, &s0),
                self.scale(&inv, &t0),
            );
        }
        (r0, s0, t0)
    }

    /// Resultant with the convention Res(f, g) = lc(f)^deg(g) * prod g(r)
    /// over the roots r of f (with multiplicity, in a splitting field).
    /// Zero iff f and g share a root; rejects the case f = g = 0.
    pub fn resultant(&self, f: &Poly<F::El>, g: &Poly<F::El>) -> Result<F::El, PolyError> {
        if f.is_zero_poly() && g.is_zero_poly() {
            return Err(PolyError::BothZero);
        }
        if f.is_zero_poly() || g.is_zero_poly() {
            // Res(f, 0) = 0: the zero polynomial shares every root.
            return Ok(self.base.zero());
        }
        let mut f = f.clone();
        let mut g = g.clone();
        let mut acc = self.base.one();
        let mut sign_flip = false;
        loop {
            let df = f.degree().unwrap();
            let dg = g.degree().unwrap();
            if df == 0 {
                // Res(c, g) = c^deg(g).
                acc = self.base.mul(&acc, &self.base.pow_u64(&f.coeffs[0], dg as u64));
                break;
            }
            if dg == 0 {
                // Res(f, c) = c^deg(f).
                acc = self.base.mul(&acc, &self.base.pow_u64(&g.coeffs[0], df as u64));
                break;
            }
            // Reduce the second argument: Res(f, g) = lc(f)^(dg - dr) Res(f, r).
            let r = self.rem(&g, &f).unwrap();
            if r.is_zero_poly() {
                return Ok(self.base.zero());
            }
            let dr = r.degree().unwrap();
            acc = self.base.mul(
                &acc,
                &self.base.pow_u64(f.leading().unwrap(), (dg - dr) as u64),
            );
            // Swap: Res(f, r) = (-1)^(df * dr) Res(r, f).
            if df * dr % 2 == 1 {
                sign_flip = !sign_flip;
            }
            g = std::mem::replace(&mut f, r);
        }
        if sign_flip {
            acc = self.base.neg(&acc);
        }
        Ok(acc)
    }
}

impl PolyRing<Rationals> {
    /// Clear denominators and content: returns primitive integer
    /// coefficients with the same roots, ascending.
    pub fn primitive_integer_coeffs(&self, f: &Poly<BigRational>) -> Vec<BigInt> {
        if f.is_zero_poly() {
            return vec![];
        }
        let mut lcm = BigInt::one();
        for c in &f.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = f
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() || g.is_one() {
            return ints;
        }
        ints.iter().map(|c| c / &g).collect()
    }

    /// All rational roots of a nonzero f in Q[x], by the rational root
    /// theorem on the primitive integer model with an exact verification of
    /// each candidate.  Roots are returned without multiplicity.
    pub fn rational_roots(&self, f: &Poly<BigRational>) -> Result<Vec<BigRational>, FactorError> {
        assert!(!f.is_zero_poly(), "rational_roots of the zero polynomial");
        let mut coeffs = self.primitive_integer_coeffs(f);
        let mut roots = Vec::new();
        // Strip x^k.
        let mut k = 0;
        while coeffs[k].is_zero() {
            k += 1;
        }
        if k > 0 {
            roots.push(BigRational::zero());
            coeffs.drain(0..k);
        }
        if coeffs.len() <= 1 {
            return Ok(roots);
        }
        let a0 = coeffs[0].magnitude().clone();
        let an = coeffs.last().unwrap().magnitude().clone();
        let p_divs = all_divisors(&factor_biguint(&a0)?);
        let q_divs = all_divisors(&factor_biguint(&an)?);
        let eval_int = |num: &BigInt, den: &BigInt| -> BigInt {
            // den^deg * f(num/den), integral.
            let deg = coeffs.len() - 1;
            let mut acc = BigInt::zero();
            let mut den_pow = BigInt::one();
            let mut num_pows = vec![BigInt::one()];
            for _ in 0..deg {
                num_pows.push(num_pows.last().unwrap() * num);
            }
            for i in (0..=deg).rev() {
                acc += &coeffs[i] * &num_pows[i] * &den_pow;
                if i > 0 {
                    den_pow *= den;
                }
            }
            acc
        };
        for p in &p_divs {
            for q in &q_divs {
                let pb = BigInt::from(p.clone());
                let qb = BigInt::from(q.clone());
                if pb.gcd(&qb) != BigInt::one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let num = &pb * BigInt::from(sign);
                    if eval_int(&num, &qb).is_zero() {
                        roots.push(BigRational::new(num, qb.clone()));
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    /// True iff f maps every integer to an integer, decided by checking that
    /// all finite differences at 0 are integers (equivalently, that f is an
    /// integer combination of binomial coefficient polynomials).
    pub fn integer_valued_on_z(&self, f: &Poly<BigRational>) -> bool {
        let deg = match f.degree() {
            None => return true,
            Some(d) => d,
        };
        let mut values: Vec<BigRational> = (0..=deg as i64)
            .map(|n| self.eval(f, &BigRational::from_integer(BigInt::from(n))))
            .collect();
        for _ in 0..=deg {
            if !values[0].denom().is_one() {
                return false;
            }
            for i in 0..values.len() - 1 {
                values[i] = &values[i + 1] - &values[i];
            }
            values.pop();
            if values.is_empty() {
                break;
            }
        }
        true
    }
}

fn all_divisors(factors: &[(BigUint, u32)]) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}
