//! The totally ramified degree-6 local field Q_7(zeta_7).
//!
//! Elements are written c_0 + c_1 pi + ... + c_5 pi^5 with c_i in Z_7 and pi
//! a root of the Eisenstein polynomial
//!
//!   E(x) = ((x+1)^7 - 1)/x = x^6 + 7x^5 + 21x^4 + 35x^3 + 35x^2 + 21x + 7,
//!
//! so zeta_7 = 1 + pi exactly, v(pi) = 1 and v(7) = 6.  Coefficients are
//! stored mod 7^N for a working digit count N; each element carries its
//! certified absolute pi-adic precision separately, so divisions by pi and
//! by 7 account for their loss honestly.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Non-leading coefficients of the Eisenstein polynomial, ascending.
pub const EISENSTEIN: [i64; 7] = [7, 21, 35, 35, 21, 7, 1];

pub const DEG: usize = 6;

/// Documented safety floor for the working precision, in pi-digits.
pub const MIN_PI_PRECISION: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalFieldError {
    PrecisionTooLow { requested: usize, floor: usize },
    NotAUnit,
    InsufficientValuation { have: Option<usize>, need: usize },
    ZeroToPrecision,
}

impl std::fmt::Display for LocalFieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LocalFieldError::PrecisionTooLow { requested, floor } => {
                write!(f, "working precision {requested} below the floor of {floor} pi-digits")
            }
            LocalFieldError::NotAUnit => write!(f, "element is not a unit"),
            LocalFieldError::InsufficientValuation { have, need } => {
                write!(f, "valuation {have:?} below required {need}")
            }
            LocalFieldError::ZeroToPrecision => write!(f, "element is zero to working precision"),
        }
    }
}

impl std::error::Error for LocalFieldError {}

/// Element of the local field: coefficients of 1, pi, ..., pi^5 over Z_7,
/// with certified absolute pi-adic precision `prec`.
#[derive(Clone, Debug)]
pub struct LocalElem {
    pub(crate) c: [BigUint; 6],
    pub(crate) prec: usize,
}

impl LocalElem {
    pub fn prec(&self) -> usize {
        self.prec
    }
}

/// Field context: working modulus 7^N on coefficients and the reduction
/// rows for pi^6..pi^10.
#[derive(Clone, Debug)]
pub struct LocalField {
    n7: usize,
    m: BigUint,
    /// red[i] = coefficients of pi^(6+i) reduced to degree < 6, mod 7^N.
    red: Vec<[BigUint; 6]>,
    /// Inverse of the unit pi^6/7 = -(1 + 3pi + 5pi^2 + 5pi^3 + 3pi^4 + pi^5).
    eis_unit_inv: [BigUint; 6],
}

fn zero6() -> [BigUint; 6] {
    [
        BigUint::zero(),
        BigUint::zero(),
        BigUint::zero(),
        BigUint::zero(),
        BigUint::zero(),
        BigUint::zero(),
    ]
}

impl LocalField {
    /// Build the field with at least `pi_precision` pi-digits of working
    /// precision (floor: 20).
    pub fn new(pi_precision: usize) -> Result<Self, LocalFieldError> {
        if pi_precision < MIN_PI_PRECISION {
            return Err(LocalFieldError::PrecisionTooLow {
                requested: pi_precision,
                floor: MIN_PI_PRECISION,
            });
        }
        let n7 = pi_precision.div_ceil(6);
        let m = BigUint::from(7u32).pow(n7 as u32);
        // pi^6 = -(7 + 21 pi + 35 pi^2 + 35 pi^3 + 21 pi^4 + 7 pi^5).
        let mut red: Vec<[BigUint; 6]> = Vec::with_capacity(5);
        let mut row0 = zero6();
        for i in 0..6 {
            let v = BigUint::from(EISENSTEIN[i] as u64) % &m;
            row0[i] = (&m - v) % &m;
        }
        red.push(row0);
        for _ in 1..5 {
            let prev = red.last().unwrap().clone();
            let mut next = zero6();
            let top = prev[5].clone();
            for i in (1..6).rev() {
                next[i] = prev[i - 1].clone();
            }
            next[0] = BigUint::zero();
            if !top.is_zero() {
                let first = red[0].clone();
                for i in 0..6 {
                    next[i] = (&next[i] + &top * &first[i]) % &m;
                }
            }
            red.push(next);
        }
        let mut field = LocalField {
            n7,
            m,
            red,
            eis_unit_inv: zero6(),
        };
        // pi^6 / 7 has exactly 7-divisible coefficients; invert it once.
        let mut eis_unit = field.zero();
        for (i, slot) in eis_unit.c.iter_mut().enumerate() {
            let v = BigUint::from((EISENSTEIN[i] / 7) as u64) % &field.m;
            *slot = (&field.m - v) % &field.m;
        }
        let inv = field.inv(&eis_unit).expect("pi^6/7 is a unit");
        field.eis_unit_inv = inv.c;
        Ok(field)
    }

    /// Working precision in pi-digits.
    pub fn pi_precision(&self) -> usize {
        6 * self.n7
    }

    /// Working precision in 7-adic digits per coefficient.
    pub fn digits7(&self) -> usize {
        self.n7
    }

    pub fn zero(&self) -> LocalElem {
        LocalElem {
            c: zero6(),
            prec: self.pi_precision(),
        }
    }

    pub fn one(&self) -> LocalElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> LocalElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> LocalElem {
        let m = BigInt::from(self.m.clone());
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        let mut e = self.zero();
        e.c[0] = r.to_biguint().unwrap();
        e
    }

    /// The uniformizer pi.
    pub fn pi(&self) -> LocalElem {
        let mut e = self.zero();
        e.c[1] = BigUint::one();
        e
    }

    /// zeta_7 = 1 + pi, exact in this representation.
    pub fn zeta(&self) -> LocalElem {
        let mut e = self.zero();
        e.c[0] = BigUint::one();
        e.c[1] = BigUint::one();
        e
    }

    /// 1 + pi^k for 0 <= k <= 7 (k > 5 is reduced).
    pub fn one_unit(&self, k: usize) -> LocalElem {
        let pik = self.pi_pow(k);
        self.add(&self.one(), &pik)
    }

    pub fn pi_pow(&self, k: usize) -> LocalElem {
        let mut acc = self.one();
        let pi = self.pi();
        for _ in 0..k {
            acc = self.mul(&acc, &pi);
        }
        acc
    }

    pub fn add(&self, a: &LocalElem, b: &LocalElem) -> LocalElem {
        let mut c = zero6();
        for i in 0..6 {
            c[i] = (&a.c[i] + &b.c[i]) % &self.m;
        }
        LocalElem {
            c,
            prec: a.prec.min(b.prec),
        }
    }

    pub fn neg(&self, a: &LocalElem) -> LocalElem {
        let mut c = zero6();
        for i in 0..6 {
            c[i] = (&self.m - &a.c[i] % &self.m) % &self.m;
        }
        LocalElem { c, prec: a.prec }
    }

    pub fn sub(&self, a: &LocalElem, b: &LocalElem) -> LocalElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &LocalElem, b: &LocalElem) -> LocalElem {
        let mut wide: Vec<BigUint> = vec![BigUint::zero(); 11];
        for i in 0..6 {
            if a.c[i].is_zero() {
                continue;
            }
            for j in 0..6 {
                if b.c[j].is_zero() {
                    continue;
                }
                wide[i + j] += &a.c[i] * &b.c[j];
            }
        }
        for i in (6..11).rev() {
            let t = std::mem::take(&mut wide[i]) % &self.m;
            if t.is_zero() {
                continue;
            }
            let row = &self.red[i - 6];
            for j in 0..6 {
                wide[j] += &t * &row[j];
            }
        }
        let mut c = zero6();
        for (j, slot) in c.iter_mut().enumerate() {
            *slot = &wide[j] % &self.m;
        }
        let va = self.val_structural(a);
        let vb = self.val_structural(b);
        let prec = (a.prec + vb).min(b.prec + va).min(self.pi_precision());
        LocalElem { c, prec }
    }

    pub fn pow_u(&self, a: &LocalElem, e: u64) -> LocalElem {
        let mut acc = self.one();
        acc.prec = a.prec.min(acc.prec);
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn v7_coeff(&self, c: &BigUint) -> usize {
        if c.is_zero() {
            return self.n7;
        }
        let seven = BigUint::from(7u32);
        let mut v = 0usize;
        let mut r = c.clone();
        while (&r % &seven).is_zero() {
            r /= &seven;
            v += 1;
        }
        v
    }

    /// Valuation ignoring the certified precision (used internally for
    /// precision bookkeeping); capped at the working precision.
    fn val_structural(&self, a: &LocalElem) -> usize {
        let mut best = self.pi_precision();
        for i in 0..6 {
            let v = 6 * self.v7_coeff(&a.c[i]) + i;
            best = best.min(v);
        }
        best
    }

    /// pi-adic valuation; `None` means zero to the certified precision.
    /// Distinct powers pi^i with distinct coefficient valuations can never
    /// cancel, so the minimum over coefficients is exact.
    pub fn val(&self, a: &LocalElem) -> Option<usize> {
        let v = self.val_structural(a);
        if v >= a.prec {
            None
        } else {
            Some(v)
        }
    }

    pub fn is_zero_to_prec(&self, a: &LocalElem) -> bool {
        self.val(a).is_none()
    }

    pub fn eq_to_prec(&self, a: &LocalElem, b: &LocalElem) -> bool {
        self.is_zero_to_prec(&self.sub(a, b))
    }

    /// Residue in F_7 = O/(pi).
    pub fn residue(&self, a: &LocalElem) -> u64 {
        (&a.c[0] % BigUint::from(7u32)).to_u64().unwrap()
    }

    /// Inverse of a unit.
    pub fn inv(&self, a: &LocalElem) -> Result<LocalElem, LocalFieldError> {
        match self.val(a) {
            Some(0) => {}
            _ => return Err(LocalFieldError::NotAUnit),
        }
        let r = self.residue(a);
        let mut z = self.from_i64(mod_inv7(r) as i64);
        z.prec = a.prec;
        let two = self.from_i64(2);
        let steps = (usize::BITS - self.pi_precision().leading_zeros()) as usize + 2;
        for _ in 0..steps {
            let az = self.mul(a, &z);
            z = self.mul(&z, &self.sub(&two, &az));
        }
        z.prec = a.prec;
        Ok(z)
    }

    /// Exact division by pi^k.  Implemented as multiplication by
    /// pi^(6w - k) followed by w coefficient divisions by 7 (valuation >= 6w
    /// forces every coefficient divisible by 7^w), so the true precision
    /// loss is exactly k plus the storage cap.
    pub fn shift_down(&self, a: &LocalElem, k: usize) -> Result<LocalElem, LocalFieldError> {
        if k == 0 {
            return Ok(a.clone());
        }
        let va = self.val(a);
        if va.map_or(true, |v| v < k) {
            // Allow shifting an element that is zero to precision only if
            // its certified precision covers the shift.
            if va.is_none() && a.prec >= k {
                let mut z = self.zero();
                z.prec = (a.prec - k).min(self.pi_precision() - 6 * k.div_ceil(6));
                return Ok(z);
            }
            return Err(LocalFieldError::InsufficientValuation { have: va, need: k });
        }
        let w = k.div_ceil(6);
        // a / pi^k = (a * pi^(6w-k)) / pi^(6w), and pi^6 = 7 * u with u the
        // Eisenstein unit, so divide coefficients by 7^w and multiply by
        // u^(-w).
        let lifted = self.mul(a, &self.pi_pow(6 * w - k));
        let seven_w = BigUint::from(7u32).pow(w as u32);
        let mut c = zero6();
        for i in 0..6 {
            let (q, r) = num_integer::Integer::div_rem(&lifted.c[i], &seven_w);
            assert!(r.is_zero(), "coefficient not divisible during pi-shift");
            c[i] = q;
        }
        let prec = (a.prec.saturating_sub(k)).min(6 * (self.n7 - w));
        let mut out = LocalElem { c, prec };
        let u_inv = LocalElem {
            c: self.eis_unit_inv.clone(),
            prec: self.pi_precision(),
        };
        for _ in 0..w {
            out = self.mul(&out, &u_inv);
        }
        out.prec = prec;
        Ok(out)
    }

    /// General division: b = pi^v * unit, requires val(a) >= val(b).
    pub fn div(&self, a: &LocalElem, b: &LocalElem) -> Result<LocalElem, LocalFieldError> {
        let vb = self.val(b).ok_or(LocalFieldError::ZeroToPrecision)?;
        let b_unit = self.shift_down(b, vb)?;
        let a_shifted = self.shift_down(a, vb)?;
        let binv = self.inv(&b_unit)?;
        Ok(self.mul(&a_shifted, &binv))
    }

    /// The local Galois automorphism determined by zeta |-> zeta^a, i.e.
    /// pi |-> (1+pi)^a - 1, applied coefficientwise (coefficients lie in the
    /// fixed field Q_7).
    pub fn galois(&self, a_exp: u64, x: &LocalElem) -> LocalElem {
        assert!((1..=6).contains(&a_exp), "Galois exponent must be in 1..=6");
        if a_exp == 1 {
            return x.clone();
        }
        let zeta_a = self.pow_u(&self.zeta(), a_exp);
        let pi_a = self.sub(&zeta_a, &self.one());
        let mut acc = self.zero();
        acc.prec = x.prec;
        let mut pw = self.one();
        for i in 0..6 {
            let mut term = pw.clone();
            for slot in term.c.iter_mut() {
                *slot = (&*slot * &x.c[i]) % &self.m;
            }
            acc = self.add(&acc, &term);
            if i < 5 {
                pw = self.mul(&pw, &pi_a);
            }
        }
        acc.prec = x.prec;
        acc
    }

    /// Element from pi-digit coefficients (ascending); digits may be any
    /// integers, e.g. `[-1]` encodes the constant -1.
    pub fn from_pi_digits(&self, digits: &[i64]) -> LocalElem {
        let mut acc = self.zero();
        let mut pw = self.one();
        for (i, &d) in digits.iter().enumerate() {
            if d != 0 {
                let t = self.mul(&self.from_i64(d), &pw);
                acc = self.add(&acc, &t);
            }
            if i + 1 < digits.len() {
                pw = self.mul(&pw, &self.pi());
            }
        }
        acc
    }

    /// Canonical pi-digit expansion (digits in 0..=6) of length `len`.
    /// Requires len <= certified precision.
    pub fn to_pi_digits(&self, a: &LocalElem, len: usize) -> Vec<u8> {
        assert!(len <= a.prec, "requested digits beyond certified precision");
        let mut out = Vec::with_capacity(len);
        let mut x = a.clone();
        for _ in 0..len {
            let d = self.residue(&x);
            out.push(d as u8);
            x = self.sub(&x, &self.from_i64(d as i64));
            x = self
                .shift_down(&x, 1)
                .expect("x - residue(x) is divisible by pi");
        }
        out
    }

    pub fn fmt_el(&self, a: &LocalElem) -> String {
        let len = a.prec.min(12);
        let digits = self.to_pi_digits(a, len);
        let terms: Vec<String> = digits
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(i, d)| match i {
                0 => format!("{d}"),
                1 => format!("{d}*pi"),
                _ => format!("{d}*pi^{i}"),
            })
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        format!("{body} + O(pi^{len})")
    }
}

fn mod_inv7(a: u64) -> u64 {
    const INV: [u64; 7] = [0, 1, 4, 5, 2, 3, 6];
    INV[(a % 7) as usize]
}
