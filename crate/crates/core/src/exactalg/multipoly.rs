//! Sparse multivariate polynomials over an exact coefficient ring.

use super::poly::{Coeff, DensePoly};
use num::bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector; the number of variables is fixed per polynomial.
pub type MultiIndex = Vec<u32>;

pub fn multi_index_norm(i: &MultiIndex) -> u32 {
    i.iter().sum()
}

/// Sparse polynomial in `nvars` variables. No stored zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<T: Coeff> {
    pub nvars: usize,
    terms: BTreeMap<MultiIndex, T>,
}

impl<T: Coeff> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, v: usize) -> Self {
        let mut idx = vec![0u32; nvars];
        idx[v] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(idx, T::one());
        p
    }

    pub fn add_term(&mut self, idx: MultiIndex, c: T) {
        assert_eq!(idx.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(T::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|i| multi_index_norm(i)).max()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> T {
        self.terms.get(idx).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (i, c) in &rhs.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                let idx: MultiIndex = i.iter().zip(j.iter()).map(|(x, y)| x + y).collect();
                out.add_term(idx, a.mul(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.nvars);
        for (i, a) in &self.terms {
            out.add_term(i.clone(), a.mul(c));
        }
        out
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> MultiPoly<U> {
        let mut out = MultiPoly::zero(self.nvars);
        for (i, a) in &self.terms {
            out.add_term(i.clone(), f(a));
        }
        out
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars);
        let mut acc = T::zero();
        for (i, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in i.iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&point[v]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute each variable by a polynomial (linear change of coordinates
    /// or shifts); exact.
    pub fn substitute(&self, images: &[MultiPoly<T>]) -> MultiPoly<T> {
        assert_eq!(images.len(), self.nvars);
        let out_vars = images.first().map_or(self.nvars, |p| p.nvars);
        let mut acc = MultiPoly::zero(out_vars);
        for (i, c) in &self.terms {
            let mut t = MultiPoly::constant(out_vars, c.clone());
            for (v, e) in i.iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&images[v]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// View the polynomial as univariate in variable `v` with multivariate
    /// coefficients in the remaining variables (which keep their positions,
    /// with exponent 0 in `v`).
    pub fn as_univariate_in(&self, v: usize) -> DensePoly<MultiPoly<T>> {
        let deg = self.terms.keys().map(|i| i[v]).max().unwrap_or(0) as usize;
        let mut buckets: Vec<MultiPoly<T>> = vec![MultiPoly::zero(self.nvars); deg + 1];
        for (i, c) in &self.terms {
            let k = i[v] as usize;
            let mut rest = i.clone();
            rest[v] = 0;
            buckets[k].add_term(rest, c.clone());
        }
        DensePoly::from_coeffs(buckets)
    }

    pub fn from_univariate_in(p: &DensePoly<MultiPoly<T>>, v: usize, nvars: usize) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            for (i, a) in &c.terms {
                let mut idx = i.clone();
                idx[v] += k as u32;
                out.add_term(idx, a.clone());
            }
        }
        out
    }

    /// Keep only terms whose total degree lies in [lo, hi].
    pub fn degree_slice(&self, lo: u32, hi: u32) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(self.nvars);
        for (i, c) in &self.terms {
            let d = multi_index_norm(i);
            if d >= lo && d <= hi {
                out.add_term(i.clone(), c.clone());
            }
        }
        out
    }
}

impl<T: Coeff> Coeff for MultiPoly<T> {
    fn zero() -> Self {
        // number of variables adapts on first combination
        MultiPoly::zero(0)
    }
    fn one() -> Self {
        MultiPoly::constant(0, T::one())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        match (self.is_zero(), rhs.is_zero()) {
            (true, _) => rhs.clone(),
            (_, true) => self.clone(),
            _ => {
                let (a, b) = align(self, rhs);
                a.add(&b)
            }
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Coeff::add(self, &rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.nvars.max(rhs.nvars));
        }
        let (a, b) = align(self, rhs);
        a.mul(&b)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), c.scale_int(k));
        }
        out
    }
}

/// Widen both operands to a common variable count (used only through the
/// `Coeff` impl, where zero polynomials carry no variable information).
fn align<T: Coeff>(a: &MultiPoly<T>, b: &MultiPoly<T>) -> (MultiPoly<T>, MultiPoly<T>) {
    let n = a.nvars.max(b.nvars);
    (a.widen(n), b.widen(n))
}

impl<T: Coeff> MultiPoly<T> {
    pub fn widen(&self, nvars: usize) -> MultiPoly<T> {
        assert!(nvars >= self.nvars);
        if nvars == self.nvars {
            return self.clone();
        }
        let mut out = MultiPoly::zero(nvars);
        for (i, c) in &self.terms {
            let mut idx = i.clone();
            idx.resize(nvars, 0);
            out.add_term(idx, c.clone());
        }
        out
    }
}

impl<T: Coeff> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{:?}*Z^{:?}", c, i)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gauss::GaussRat;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn ring_ops() {
        // (z1 + z2)^2 = z1^2 + 2 z1 z2 + z2^2
        let z1 = MultiPoly::variable(2, 0);
        let z2 = MultiPoly::variable(2, 1);
        let s: MultiPoly<GaussRat> = z1.add(&z2);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&vec![2, 0]), g(1));
        assert_eq!(sq.coeff(&vec![1, 1]), g(2));
        assert_eq!(sq.coeff(&vec![0, 2]), g(1));
        assert_eq!(sq.term_count(), 3);
    }

    #[test]
    fn substitution_linear() {
        // p(z1, z2) = z1^2; substitute z1 = w1 + w2: (w1+w2)^2
        let p: MultiPoly<GaussRat> =
            MultiPoly::variable(2, 0).mul(&MultiPoly::variable(2, 0));
        let w_sum = MultiPoly::variable(2, 0).add(&MultiPoly::variable(2, 1));
        let q = p.substitute(&[w_sum, MultiPoly::variable(2, 1)]);
        assert_eq!(q.coeff(&vec![1, 1]), g(2));
    }

    #[test]
    fn univariate_view_roundtrip() {
        let mut p: MultiPoly<GaussRat> = MultiPoly::zero(2);
        p.add_term(vec![3, 1], g(5));
        p.add_term(vec![0, 2], g(-1));
        let u = p.as_univariate_in(0);
        assert_eq!(u.degree(), Some(3));
        let back = MultiPoly::from_univariate_in(&u, 0, 2);
        assert_eq!(back, p);
    }
}
