//! Dense univariate polynomials over an exact coefficient ring.

use super::dyadic::DyComplex;
use super::gauss::GaussRat;
use num::bigint::BigInt;
use num::traits::Zero;
use std::fmt;

/// Exact ring of coefficients. Implemented by Gaussian rationals, exact
/// dyadic complex scalars, big integers and multivariate polynomials, so the
/// same solver and shift code serves every layer of the construction.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale_int(&self, k: &BigInt) -> Self;
}

impl Coeff for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&super::rat::Rat::from_integer(k.clone()))
    }
}

impl Coeff for DyComplex {
    fn zero() -> Self {
        DyComplex::zero()
    }
    fn one() -> Self {
        DyComplex::from_int(1)
    }
    fn is_zero(&self) -> bool {
        DyComplex::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        DyComplex::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        DyComplex::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        DyComplex::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        DyComplex::neg(self)
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        DyComplex::scale_int(self, k)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        BigInt::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self * k
    }
}

/// Dense polynomial, coefficients indexed by degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Debug)]
pub struct DensePoly<T: Coeff> {
    coeffs: Vec<T>,
}

impl<T: Coeff> DensePoly<T> {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * x^k
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        DensePoly { coeffs: v }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        DensePoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale_int(k)).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs: v }
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.scale_int(&BigInt::from(k)));
        }
        Self::from_coeffs(out)
    }

    /// q with q(x) = p(x + c), by the Horner-style O(d^2) binomial scheme.
    pub fn taylor_shift(&self, c: &T) -> Self {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        // synthetic division by (x - (-c)) repeatedly
        let n = self.coeffs.len();
        let mut w = self.coeffs.clone();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let t = w[k + 1].mul(c);
                w[k] = w[k].add(&t);
            }
        }
        Self::from_coeffs(w)
    }

    /// Taylor shift by an integer constant, using only integer scaling.
    pub fn taylor_shift_int(&self, c: &BigInt) -> Self {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut w = self.coeffs.clone();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let t = w[k + 1].scale_int(c);
                w[k] = w[k].add(&t);
            }
        }
        Self::from_coeffs(w)
    }

    /// Exact division; panics if the division leaves a remainder. Used by the
    /// fraction-free elimination, where divisions are exact by construction.
    pub fn div_exact(&self, rhs: &Self) -> Self
    where
        T: CoeffField,
    {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dr = rhs.coeffs.len() - 1;
        let lead = rhs.coeffs.last().unwrap();
        assert!(rem.len() >= rhs.coeffs.len(), "inexact polynomial division");
        let mut quo = vec![T::zero(); rem.len() - dr];
        for k in (dr..rem.len()).rev() {
            let q = rem[k].field_div(lead);
            if !q.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    let t = q.mul(b);
                    rem[k - dr + j] = rem[k - dr + j].sub(&t);
                }
            }
            quo[k - dr] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_coeffs(quo)
    }
}

/// Coefficient rings with exact division, for the elimination-based oracles.
pub trait CoeffField: Coeff {
    fn field_div(&self, rhs: &Self) -> Self;
}

impl CoeffField for GaussRat {
    fn field_div(&self, rhs: &Self) -> Self {
        self * &rhs.recip()
    }
}

impl<T: Coeff> DensePoly<T> {
    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> DensePoly<U> {
        DensePoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

/// Polynomial in one variable allowing negative exponents; scratch type for
/// the residual verification, where positive powers of the center must cancel
/// and pole terms remain.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<T: Coeff> {
    terms: std::collections::BTreeMap<i64, T>,
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { terms: std::collections::BTreeMap::new() }
    }

    pub fn term(c: T, e: i64) -> Self {
        let mut t = Self::zero();
        t.add_term(c, e);
        t
    }

    pub fn add_term(&mut self, c: T, e: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(T::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(c.clone(), *e);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &T)> {
        self.terms.iter()
    }

    /// Coefficients at exponents >= 0 (must vanish for the magic condition).
    pub fn nonnegative_part(&self) -> Vec<(i64, T)> {
        self.terms.range(0..).map(|(e, c)| (*e, c.clone())).collect()
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat_i64;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn shift_examples() {
        // (z+1)^2 = 1 + 2z + z^2
        let p = DensePoly::monomial(g(1), 2);
        let q = p.taylor_shift(&g(1));
        assert_eq!(q.coeffs(), &[g(1), g(2), g(1)]);
        // (z+2)^3 = 8 + 12z + 6z^2 + z^3
        let p = DensePoly::monomial(g(1), 3);
        let q = p.taylor_shift(&g(2));
        assert_eq!(q.coeffs(), &[g(8), g(12), g(6), g(1)]);
    }

    #[test]
    fn shift_roundtrip() {
        let p = DensePoly::from_coeffs(vec![
            GaussRat::new(rat_i64(1, 3), rat_i64(2, 7)),
            g(-4),
            GaussRat::new(rat_i64(0, 1), rat_i64(5, 2)),
            g(9),
        ]);
        let c = GaussRat::new(rat_i64(3, 5), rat_i64(-1, 2));
        let back = p.taylor_shift(&c).taylor_shift(&(-&c));
        assert_eq!(back, p);
    }

    #[test]
    fn shift_is_ring_hom() {
        let p = DensePoly::from_coeffs(vec![g(1), g(2), g(3)]);
        let q = DensePoly::from_coeffs(vec![g(-5), g(7)]);
        let c = GaussRat::new(rat_i64(2, 3), rat_i64(1, 5));
        let lhs = p.mul(&q).taylor_shift(&c);
        let rhs = p.taylor_shift(&c).mul(&q.taylor_shift(&c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_additive() {
        let p = DensePoly::from_coeffs(vec![g(3), g(0), g(-2), g(1)]);
        let q = DensePoly::from_coeffs(vec![g(5), g(1)]);
        let z = GaussRat::new(rat_i64(7, 11), rat_i64(-3, 4));
        let lhs = p.add(&q).eval(&z);
        let rhs = &p.eval(&z) + &q.eval(&z);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn div_exact_works() {
        let p = DensePoly::from_coeffs(vec![g(1), g(2), g(1)]); // (1+z)^2
        let d = DensePoly::from_coeffs(vec![g(1), g(1)]);
        assert_eq!(p.div_exact(&d), d);
    }
}
