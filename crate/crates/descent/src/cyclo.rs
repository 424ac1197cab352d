//! Global cyclotomic data: Q(zeta_7), the six alpha-roots splitting the two
//! cubics, and their exact embeddings into the local field via
//! zeta = 1 + pi.

use seven_algebra::cubics;
use seven_algebra::poly::PolyRing;
use seven_algebra::quotient::QuotientRing;
use seven_algebra::ring::{Rationals, Ring};
use seven_algebra::Rat;
use seven_padic::local::{LocalElem, LocalField};

pub type Cyclotomic = QuotientRing<Rationals>;
pub type CycEl = <Cyclotomic as Ring>::El;

pub struct CyclotomicData {
    pub field: Cyclotomic,
    /// alpha_1..alpha_3 = 1 + zeta^i + zeta^-i (roots of the numerator
    /// cubic); alpha_4..alpha_6 = -(zeta^i + zeta^-i) (roots of the
    /// denominator cubic).
    pub alphas: [CycEl; 6],
}

pub fn cyclotomic_setup() -> CyclotomicData {
    let q = Rationals;
    let pr = PolyRing::new(q);
    let field = QuotientRing::new(q, pr.from_i64_coeffs(&[1, 1, 1, 1, 1, 1, 1]));
    let z = field.generator();
    let mut alphas: Vec<CycEl> = Vec::with_capacity(6);
    for i in 1..=3u64 {
        let s = field.add(&field.pow_u64(&z, i), &field.pow_u64(&z, 7 - i));
        alphas.push(field.add(&field.one(), &s));
    }
    for i in 1..=3u64 {
        let s = field.add(&field.pow_u64(&z, i), &field.pow_u64(&z, 7 - i));
        alphas.push(field.neg(&s));
    }
    CyclotomicData {
        field,
        alphas: alphas.try_into().unwrap(),
    }
}

impl CyclotomicData {
    /// Verify prod (x - alpha_i) = num(x) den(x) exactly in k[x].
    pub fn alpha_product_identity(&self) -> bool {
        let kf = &self.field;
        let pr = PolyRing::new(kf.clone());
        let mut prod = pr.one();
        for a in &self.alphas {
            prod = pr.mul_poly(&prod, &pr.poly(vec![kf.neg(a), kf.one()]));
        }
        let f0 = pr.mul_poly(&cubics::num_cubic(&pr), &cubics::den_cubic(&pr));
        pr.eq_poly(&prod, &f0)
    }

    /// Embed a cyclotomic element into the local field via zeta = 1 + pi.
    /// Denominators must be 7-adic units.
    pub fn embed_local(&self, local: &LocalField, x: &CycEl) -> LocalElem {
        let kf = &self.field;
        let zeta = local.zeta();
        let mut acc = local.zero();
        let mut pw = local.one();
        for i in 0..6 {
            let c: Rat = kf.rep_coeff(x, i);
            if !Rationals.is_zero(&c) {
                let num = local.from_bigint(c.numer());
                let den = local.from_bigint(c.denom());
                let cl = local
                    .mul(&num, &local.inv(&den).expect("denominator must be a 7-adic unit"));
                acc = local.add(&acc, &local.mul(&cl, &pw));
            }
            if i < 5 {
                pw = local.mul(&pw, &zeta);
            }
        }
        acc
    }

    /// The Galois substitution zeta -> zeta^a on the global field.
    pub fn galois(&self, a: u64, x: &CycEl) -> CycEl {
        let kf = &self.field;
        let za = kf.pow_u64(&kf.generator(), a % 7);
        kf.eval_rep_in(x, kf, |c| kf.from_base(c.clone()), &za)
    }
}
