//! Gaussian rationals: complex numbers with rational real and imaginary part.

use super::rat::{rat_from_str, rat_to_string, Rat};
use num::bigint::BigInt;
use num::traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the countable dense subfield of C used for every target
/// polynomial and every construction coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        GaussRat { re: Rat::from_integer(BigInt::from(1)), im: Rat::zero() }
    }

    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::from_integer(BigInt::from(1)) }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2, exact.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat { re: &self.re * r, im: &self.im * r }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussRat { re: &self.re / &n, im: -&self.im / &n }
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.recip().pow(-k);
        }
        let mut acc = GaussRat::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical string `re_num/re_den,im_num/im_den`.
    pub fn to_parts_string(&self) -> String {
        format!("{},{}", rat_to_string(&self.re), rat_to_string(&self.im))
    }

    pub fn from_parts_str(s: &str) -> Option<Self> {
        let (re, im) = s.split_once(',')?;
        Some(GaussRat { re: rat_from_str(re)?, im: rat_from_str(im)? })
    }

    /// Largest of the two part heights, where height(p/q) = max(|p|, q).
    /// Used by the target enumeration.
    pub fn height(&self) -> BigInt {
        fn h(r: &Rat) -> BigInt {
            let p = r.numer().abs();
            let q = r.denom().clone();
            if p > q { p } else { q }
        }
        let a = h(&self.re);
        let b = h(&self.im);
        if a > b { a } else { b }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}i)", self.re, self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_parts_string())
    }
}

impl<'a> Add for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'a GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'a GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'a GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat_i64;

    #[test]
    fn field_ops() {
        let a = GaussRat::new(rat_i64(1, 2), rat_i64(-1, 3));
        let b = GaussRat::new(rat_i64(2, 5), rat_i64(7, 1));
        let prod = &a * &b;
        let back = &prod * &b.recip();
        assert_eq!(back, a);
    }

    #[test]
    fn norms() {
        let z = GaussRat::new(rat_i64(3, 1), rat_i64(4, 1));
        assert_eq!(z.norm_sqr(), rat_i64(25, 1));
    }

    #[test]
    fn parts_roundtrip() {
        let z = GaussRat::new(rat_i64(-5, 7), rat_i64(2, 9));
        assert_eq!(GaussRat::from_parts_str(&z.to_parts_string()).unwrap(), z);
    }
}
