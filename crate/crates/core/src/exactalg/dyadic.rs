//! Exact dyadic-sum scalars.
//!
//! A `Dyadic` is a finite sum of terms `m * 2^e` with odd-reduced rational
//! mantissas `m` (both numerator and denominator odd) and distinct `i128`
//! exponents. The odd normalization makes the form canonical: a sum is zero
//! iff it has no terms, because terms at distinct exponents have distinct
//! 2-adic valuations. This lets the construction carry exact values whose
//! plain-fraction form would need billions of bits, as long as no operation
//! ever needs to merge terms across astronomically wide exponent gaps.

use super::dyf::{CEnc, DyF, Enc, Round};
use super::gauss::GaussRat;
use super::rat::Rat;
use num::bigint::{BigInt, Sign};
use num::traits::{One, Signed, Zero};
use std::fmt;

/// Exact real number as a canonical sum of dyadic terms, sorted by exponent.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Dyadic {
    terms: Vec<(Rat, i128)>,
}

/// Split r = m * 2^v with m odd-reduced; r must be nonzero.
fn split_2adic(r: &Rat) -> (Rat, i128) {
    let num = r.numer();
    let den = r.denom();
    let vn = num.trailing_zeros().unwrap_or(0) as i128;
    let vd = den.trailing_zeros().unwrap_or(0) as i128;
    let m = Rat::new(num >> vn as u64, den >> vd as u64);
    (m, vn - vd)
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { terms: Vec::new() }
    }

    pub fn from_rat(r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let (m, e) = split_2adic(r);
        Dyadic { terms: vec![(m, e)] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rat, i128)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn push_term(&mut self, m: Rat, e: i128) {
        if m.is_zero() {
            return;
        }
        let (mm, de) = split_2adic(&m);
        let e = e + de;
        match self.terms.binary_search_by(|t| t.1.cmp(&e)) {
            Ok(i) => {
                let merged = &self.terms[i].0 + &mm;
                if merged.is_zero() {
                    self.terms.remove(i);
                } else {
                    let (m2, d2) = split_2adic(&merged);
                    self.terms.remove(i);
                    self.push_term(m2, e + d2);
                }
            }
            Err(i) => self.terms.insert(i, (mm, e)),
        }
    }

    pub fn add(&self, rhs: &Dyadic) -> Dyadic {
        let mut out = self.clone();
        for (m, e) in &rhs.terms {
            out.push_term(m.clone(), *e);
        }
        out
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { terms: self.terms.iter().map(|(m, e)| (-m.clone(), *e)).collect() }
    }

    pub fn sub(&self, rhs: &Dyadic) -> Dyadic {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Dyadic) -> Dyadic {
        let mut out = Dyadic::zero();
        for (a, ea) in &self.terms {
            for (b, eb) in &rhs.terms {
                out.push_term(a * b, ea + eb);
            }
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Dyadic {
        if r.is_zero() {
            return Dyadic::zero();
        }
        let (m, e) = split_2adic(r);
        let mut out = Dyadic::zero();
        for (a, ea) in &self.terms {
            out.push_term(a * &m, ea + e);
        }
        out
    }

    pub fn mul_pow2(&self, e: i128) -> Dyadic {
        Dyadic { terms: self.terms.iter().map(|(m, t)| (m.clone(), t + e)).collect() }
    }

    /// Exact rational value; `None` when the exponent spread is too wide to
    /// materialize (> 2^22 bits of shift).
    pub fn to_rat(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        let base = self.terms[0].1;
        let spread = self.terms.last().unwrap().1 - base;
        if spread > (1 << 22) || base.unsigned_abs() > (1 << 22) {
            return None;
        }
        let mut acc = Rat::zero();
        for (m, e) in &self.terms {
            let shift = (e - base) as u64;
            acc += m * Rat::from_integer(BigInt::one() << shift);
        }
        let scale = if base >= 0 {
            Rat::from_integer(BigInt::one() << base as u64)
        } else {
            Rat::new(BigInt::one(), BigInt::one() << (-base) as u64)
        };
        Some(acc * scale)
    }

    /// Certified enclosure.
    pub fn enclosure(&self) -> Enc {
        let mut lo = DyF::zero();
        let mut hi = DyF::zero();
        for (m, e) in &self.terms {
            lo = lo.add(&DyF::from_rat(m, Round::Down).mul_pow2(*e), Round::Down);
            hi = hi.add(&DyF::from_rat(m, Round::Up).mul_pow2(*e), Round::Up);
        }
        Enc { lo, hi }
    }

    /// Upper bound on |x| by the triangle inequality; cheap and always valid.
    pub fn mag_ub(&self) -> DyF {
        let mut acc = DyF::zero();
        for (m, e) in &self.terms {
            let a = DyF::from_rat(&m.abs(), Round::Up).mul_pow2(*e);
            acc = acc.add(&a, Round::Up);
        }
        acc
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*2^{}", m, e)?;
        }
        Ok(())
    }
}

/// Exact complex dyadic scalar.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DyComplex {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl DyComplex {
    pub fn zero() -> Self {
        DyComplex { re: Dyadic::zero(), im: Dyadic::zero() }
    }

    pub fn from_gauss(z: &GaussRat) -> Self {
        DyComplex { re: Dyadic::from_rat(&z.re), im: Dyadic::from_rat(&z.im) }
    }

    pub fn from_int(n: i64) -> Self {
        DyComplex { re: Dyadic::from_int(n), im: Dyadic::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        DyComplex { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        DyComplex { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn neg(&self) -> Self {
        DyComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        DyComplex {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    pub fn scale_gauss(&self, z: &GaussRat) -> Self {
        let a = DyComplex { re: self.re.scale_rat(&z.re), im: self.im.scale_rat(&z.re) };
        let b = DyComplex { re: self.im.scale_rat(&z.im).neg(), im: self.re.scale_rat(&z.im) };
        a.add(&b)
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let r = Rat::from_integer(n.clone());
        DyComplex { re: self.re.scale_rat(&r), im: self.im.scale_rat(&r) }
    }

    pub fn mul_pow2(&self, e: i128) -> Self {
        DyComplex { re: self.re.mul_pow2(e), im: self.im.mul_pow2(e) }
    }

    /// Exact Gaussian-rational value when materializable.
    pub fn to_gauss(&self) -> Option<GaussRat> {
        Some(GaussRat::new(self.re.to_rat()?, self.im.to_rat()?))
    }

    pub fn enclosure(&self) -> CEnc {
        CEnc { re: self.re.enclosure(), im: self.im.enclosure() }
    }

    /// Certified upper bound on the modulus.
    pub fn mag_ub(&self) -> DyF {
        let r = self.re.mag_ub();
        let i = self.im.mag_ub();
        r.mul(&r, Round::Up).add(&i.mul(&i, Round::Up), Round::Up).sqrt(Round::Up)
    }

    pub fn term_count(&self) -> usize {
        self.re.term_count() + self.im.term_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat_i64;

    #[test]
    fn canonical_zero_detection() {
        let a = Dyadic::from_rat(&rat_i64(3, 4));
        let b = Dyadic::from_rat(&rat_i64(-3, 4));
        assert!(a.add(&b).is_zero());
        // cancellation across different incoming exponents
        let c = Dyadic::from_rat(&rat_i64(6, 8));
        assert!(c.sub(&a).is_zero());
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let xs = [rat_i64(7, 12), rat_i64(-5, 48), rat_i64(9, 1)];
        let mut d = Dyadic::zero();
        let mut r = Rat::zero();
        for x in &xs {
            d = d.add(&Dyadic::from_rat(x));
            r += x;
        }
        assert_eq!(d.to_rat().unwrap(), r);
        let sq = d.mul(&d);
        assert_eq!(sq.to_rat().unwrap(), &r * &r);
    }

    #[test]
    fn huge_gap_sums_stay_symbolic() {
        let big = Dyadic::from_rat(&rat_i64(1, 1));
        let tiny = Dyadic::from_rat(&rat_i64(3, 1)).mul_pow2(-100_000_000_000);
        let s = big.add(&tiny);
        assert_eq!(s.term_count(), 2);
        assert!(s.to_rat().is_none());
        let enc = s.enclosure();
        assert!(enc.lo.cmp_rat(&rat_i64(1, 1)) != std::cmp::Ordering::Less);
        assert!(enc.hi.cmp_rat(&rat_i64(2, 1)) == std::cmp::Ordering::Less);
    }

    #[test]
    fn complex_mul() {
        let a = DyComplex::from_gauss(&GaussRat::new(rat_i64(1, 2), rat_i64(1, 3)));
        let b = DyComplex::from_gauss(&GaussRat::new(rat_i64(-2, 5), rat_i64(4, 7)));
        let p = a.mul(&b).to_gauss().unwrap();
        let q = &GaussRat::new(rat_i64(1, 2), rat_i64(1, 3)) * &GaussRat::new(rat_i64(-2, 5), rat_i64(4, 7));
        assert_eq!(p, q);
    }
}
