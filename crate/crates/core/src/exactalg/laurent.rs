//! The parameterized Laurent ring (1/c) * R[1/c].
//!
//! Solutions of the step systems live here before the center is specialized:
//! every element is a finite sum of terms r_p * c^(-p) with pole order p >= 1,
//! so its value decays at least like 1/c as the center grows.

use super::dyf::{DyF, Round};
use super::poly::Coeff;
use num::bigint::BigInt;
use num::traits::One;
use std::collections::BTreeMap;

/// Finite map pole order -> base-ring element; no zero terms, all poles >= 1.
#[derive(Clone, PartialEq, Debug)]
pub struct ParamLaurent<T: Coeff> {
    terms: BTreeMap<u32, T>,
}

impl<T: Coeff> ParamLaurent<T> {
    pub fn zero() -> Self {
        ParamLaurent { terms: BTreeMap::new() }
    }

    pub fn term(c: T, pole: u32) -> Self {
        assert!(pole >= 1, "pole order must be >= 1");
        let mut t = Self::zero();
        t.add_term(c, pole);
        t
    }

    pub fn add_term(&mut self, c: T, pole: u32) {
        assert!(pole >= 1, "pole order must be >= 1");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(pole).or_insert_with(T::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&pole);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &T)> {
        self.terms.iter()
    }

    /// Minimal pole order present; `None` for zero.
    pub fn min_pole(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn max_pole(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(c.clone(), *p);
        }
        out
    }

    pub fn neg(&self) -> Self {
        ParamLaurent { terms: self.terms.iter().map(|(p, c)| (*p, c.neg())).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            out.add_term(a.mul(c), *p);
        }
        out
    }

    /// Exact evaluation at an integer center c >= 1.
    pub fn specialize(&self, c: &BigInt) -> T
    where
        T: SpecializeInt,
    {
        assert!(c >= &BigInt::one(), "center must be >= 1");
        let mut acc = T::zero();
        for (p, a) in &self.terms {
            acc = acc.add(&a.div_int_pow(c, *p));
        }
        acc
    }
}

/// Base rings that can be divided exactly by integer powers (specialization
/// of the center parameter).
pub trait SpecializeInt: Coeff {
    fn div_int_pow(&self, c: &BigInt, pole: u32) -> Self;
    /// Certified upper bound on the modulus (for decay bounds); for
    /// polynomial base rings this is the coefficient-sum bound at radius 1.
    fn mag_ub(&self) -> DyF;
}

impl SpecializeInt for super::gauss::GaussRat {
    fn div_int_pow(&self, c: &BigInt, pole: u32) -> Self {
        let mut d = super::rat::Rat::from_integer(BigInt::one());
        for _ in 0..pole {
            d *= super::rat::Rat::from_integer(c.clone());
        }
        self.scale(&d.recip())
    }
    fn mag_ub(&self) -> DyF {
        super::dyf::CEnc::from_gauss(self).mag_ub()
    }
}

impl SpecializeInt for super::dyadic::DyComplex {
    fn div_int_pow(&self, c: &BigInt, pole: u32) -> Self {
        // exact when c is a power of two; otherwise materializes the power
        if let Some(bits) = pow2_exponent(c) {
            return self.mul_pow2(-(bits as i128) * pole as i128);
        }
        let mut d = super::rat::Rat::from_integer(BigInt::one());
        for _ in 0..pole {
            d *= super::rat::Rat::from_integer(c.clone());
        }
        let inv = d.recip();
        super::dyadic::DyComplex {
            re: self.re.scale_rat(&inv),
            im: self.im.scale_rat(&inv),
        }
    }
    fn mag_ub(&self) -> DyF {
        self.mag_ub()
    }
}

impl<T: SpecializeInt> SpecializeInt for super::multipoly::MultiPoly<T> {
    fn div_int_pow(&self, c: &BigInt, pole: u32) -> Self {
        self.map(|a| a.div_int_pow(c, pole))
    }
    fn mag_ub(&self) -> DyF {
        // sum of coefficient bounds: valid on the unit polydisc
        let mut acc = DyF::zero();
        for (_, a) in self.terms() {
            acc = acc.add(&a.mag_ub(), Round::Up);
        }
        acc
    }
}

/// Exponent if n is exactly a power of two.
pub fn pow2_exponent(n: &BigInt) -> Option<u64> {
    if n.sign() != num::bigint::Sign::Plus {
        return None;
    }
    let m = n.magnitude();
    let tz = m.trailing_zeros().unwrap_or(0);
    if m.bits() == tz + 1 {
        Some(tz)
    } else {
        None
    }
}

/// Certified bound on |L(c)| of the form (sum of term bounds) / c, valid for
/// every integer center >= the given one and nonincreasing in c.
pub fn laurent_decay_bound<T: SpecializeInt>(l: &ParamLaurent<T>, c: &BigInt) -> DyF {
    assert!(c >= &BigInt::one());
    let c_lb = DyF::from_bigint_rounded(c, Round::Down);
    let inv = c_lb.recip(Round::Up);
    let mut acc = DyF::zero();
    for (p, a) in l.iter() {
        let b = a.mag_ub().mul(&inv.pow(*p as u64, Round::Up), Round::Up);
        acc = acc.add(&b, Round::Up);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gauss::GaussRat;
    use crate::exactalg::rat::rat_i64;
    use std::cmp::Ordering;

    #[test]
    fn specialize_examples() {
        // L = 1/c at c = 4 -> 1/4
        let l = ParamLaurent::term(GaussRat::one(), 1);
        let v = l.specialize(&BigInt::from(4));
        assert_eq!(v, GaussRat::from_rat(rat_i64(1, 4)));

        // L = (2 + 3/c) * (1/c) = 2/c + 3/c^2 at c = 2 -> 1 + 3/4 = 7/4
        let mut l = ParamLaurent::zero();
        l.add_term(GaussRat::from_int(2), 1);
        l.add_term(GaussRat::from_int(3), 2);
        let v = l.specialize(&BigInt::from(2));
        assert_eq!(v, GaussRat::from_rat(rat_i64(7, 4)));
    }

    #[test]
    fn decay_bound_monotone() {
        let mut l = ParamLaurent::zero();
        l.add_term(GaussRat::new(rat_i64(5, 3), rat_i64(-1, 2)), 1);
        l.add_term(GaussRat::from_int(-7), 3);
        for c in [2i64, 4, 8] {
            let b1 = laurent_decay_bound(&l, &BigInt::from(c));
            let b2 = laurent_decay_bound(&l, &BigInt::from(2 * c));
            assert!(b2.cmp(&b1) != Ordering::Greater);
            // and the bound really dominates the specialized value
            let v = l.specialize(&BigInt::from(c));
            let vm = crate::exactalg::dyf::CEnc::from_gauss(&v).mag_ub();
            assert!(vm.cmp(&b1) != Ordering::Greater);
        }
    }

    #[test]
    fn pow2_detect() {
        assert_eq!(pow2_exponent(&BigInt::from(2048)), Some(11));
        assert_eq!(pow2_exponent(&BigInt::from(2049)), None);
        assert_eq!(pow2_exponent(&BigInt::from(1)), Some(0));
    }
}
