//! Directed-rounding dyadic floats with wide exponents.
//!
//! The construction specializes centers to powers of two whose exponents
//! reach the billions, so certified bounds must handle values like
//! `m * 2^(-10^9)` without ever materializing the power. `DyF` is a dyadic
//! float `sign * mant * 2^exp` with a `BigUint` mantissa capped at
//! [`PRECISION`] bits and an `i128` exponent; every operation takes an
//! explicit rounding direction and the result is always a true one-sided
//! bound. `Enc` is the interval built from two of them.

use super::rat::Rat;
use num::bigint::{BigInt, BigUint, Sign};
use num::traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Mantissa precision in bits. Large enough that rounding never matters for
/// certificate margins, small enough that arithmetic stays cheap.
pub const PRECISION: u64 = 128;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Round {
    /// Toward +infinity.
    Up,
    /// Toward -infinity.
    Down,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Up => Round::Down,
            Round::Down => Round::Up,
        }
    }
}

/// Dyadic float `sign * mant * 2^exp`; `sign == 0` iff the value is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct DyF {
    sign: i8,
    mant: BigUint,
    exp: i128,
}

impl fmt::Debug for DyF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}{}*2^{}", if self.sign < 0 { "-" } else { "" }, self.mant, self.exp)
        }
    }
}

impl DyF {
    pub fn zero() -> Self {
        DyF { sign: 0, mant: BigUint::zero(), exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponent(&self) -> i128 {
        self.exp
    }

    /// 2^e, exact.
    pub fn pow2(e: i128) -> Self {
        DyF { sign: 1, mant: BigUint::one(), exp: e }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
        let mut v = DyF { sign, mant: n.magnitude().clone(), exp: 0 };
        // exact as long as it fits; rounding direction irrelevant for fit
        v.normalize(Round::Up);
        v
    }

    /// Exact when the magnitude fits in PRECISION bits, otherwise rounded in
    /// the requested direction.
    pub fn from_bigint_rounded(n: &BigInt, r: Round) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
        let mut v = DyF { sign, mant: n.magnitude().clone(), exp: 0 };
        v.normalize(r);
        v
    }

    /// One-sided dyadic bound of a rational.
    pub fn from_rat(q: &Rat, r: Round) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let sign: i8 = if q.numer().sign() == Sign::Minus { -1 } else { 1 };
        let num = q.numer().magnitude();
        let den = q.denom().magnitude();
        // scale so the quotient carries PRECISION + 2 significant bits
        let shift = (PRECISION as i128 + 2) - (num.bits() as i128 - den.bits() as i128);
        let shift = shift.max(0) as u64;
        let scaled = num << shift;
        let (quo, rem) = num::Integer::div_rem(&scaled, den);
        let exact = rem.is_zero();
        let mut mant = quo;
        // outward adjust: direction refers to the signed value
        let bump = match (r, sign) {
            (Round::Up, 1) | (Round::Down, -1) => !exact,
            _ => false,
        };
        if bump {
            mant += BigUint::one();
        }
        let mut v = DyF { sign, mant, exp: -(shift as i128) };
        v.normalize(r);
        v
    }

    fn normalize(&mut self, r: Round) {
        if self.mant.is_zero() {
            *self = DyF::zero();
            return;
        }
        let bits = self.mant.bits();
        if bits > PRECISION {
            let drop = bits - PRECISION;
            let rem_nonzero = {
                let mask = (BigUint::one() << drop) - BigUint::one();
                !(&self.mant & &mask).is_zero()
            };
            self.mant >>= drop;
            self.exp += drop as i128;
            let bump = match (r, self.sign) {
                (Round::Up, 1) | (Round::Down, -1) => rem_nonzero,
                _ => false,
            };
            if bump {
                self.mant += BigUint::one();
                if self.mant.bits() > PRECISION {
                    self.mant >>= 1u32;
                    self.exp += 1;
                }
            }
        }
        // keep exponents tidy: strip trailing zero bits
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i128;
        }
    }

    pub fn neg(&self) -> Self {
        DyF { sign: -self.sign, mant: self.mant.clone(), exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        DyF { sign: if self.sign == 0 { 0 } else { 1 }, mant: self.mant.clone(), exp: self.exp }
    }

    /// Shift by a power of two; always exact.
    pub fn mul_pow2(&self, e: i128) -> Self {
        if self.sign == 0 {
            return self.clone();
        }
        DyF { sign: self.sign, mant: self.mant.clone(), exp: self.exp + e }
    }

    pub fn add(&self, rhs: &DyF, r: Round) -> Self {
        if self.sign == 0 {
            return rhs.clone();
        }
        if rhs.sign == 0 {
            return self.clone();
        }
        // align exponents; if the gap exceeds what PRECISION can see, the
        // smaller operand only contributes a directed nudge
        let (big, small) = if mag_log2_hi(self) >= mag_log2_hi(rhs) { (self, rhs) } else { (rhs, self) };
        let gap = big.exp - small.exp;
        let budget = (PRECISION + small.mant.bits() + 4) as i128;
        if gap > budget {
            let nudge = match (r, small.sign) {
                (Round::Up, 1) | (Round::Down, -1) => true,
                _ => false,
            };
            if !nudge {
                return big.clone();
            }
            // one ulp beyond the dropped tail, in the rounding direction
            let ulp = DyF { sign: small.sign, mant: BigUint::one(), exp: big.exp - PRECISION as i128 };
            return big.add(&ulp, r);
        }
        debug_assert!(gap >= 0 || (-gap) <= (PRECISION + big.mant.bits() + 4) as i128);
        let (a, b, exp) = if gap >= 0 {
            ((&big.mant << gap as u64), small.mant.clone(), small.exp)
        } else {
            (big.mant.clone(), (&small.mant << (-gap) as u64), big.exp)
        };
        let sa = BigInt::from_biguint(if big.sign < 0 { Sign::Minus } else { Sign::Plus }, a);
        let sb = BigInt::from_biguint(if small.sign < 0 { Sign::Minus } else { Sign::Plus }, b);
        let sum = sa + sb;
        if sum.is_zero() {
            return DyF::zero();
        }
        let sign = if sum.sign() == Sign::Minus { -1 } else { 1 };
        let mut v = DyF { sign, mant: sum.magnitude().clone(), exp };
        v.normalize(r);
        v
    }

    pub fn sub(&self, rhs: &DyF, r: Round) -> Self {
        self.add(&rhs.neg(), r)
    }

    pub fn mul(&self, rhs: &DyF, r: Round) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return DyF::zero();
        }
        let mut v = DyF {
            sign: self.sign * rhs.sign,
            mant: &self.mant * &rhs.mant,
            exp: self.exp + rhs.exp,
        };
        v.normalize(r);
        v
    }

    /// Reciprocal with directed rounding. Panics on zero.
    pub fn recip(&self, r: Round) -> Self {
        assert!(self.sign != 0, "reciprocal of zero");
        // 1/(m*2^e) = (2^s/m) * 2^(-e-s)
        let s = self.mant.bits() + PRECISION + 2;
        let num = BigUint::one() << s;
        let (quo, rem) = num::Integer::div_rem(&num, &self.mant);
        let exact = rem.is_zero();
        let bump = match (r, self.sign) {
            (Round::Up, 1) | (Round::Down, -1) => !exact,
            _ => false,
        };
        let mut mant = quo;
        if bump {
            mant += BigUint::one();
        }
        let mut v = DyF { sign: self.sign, mant, exp: -self.exp - s as i128 };
        v.normalize(r);
        v
    }

    pub fn div(&self, rhs: &DyF, r: Round) -> Self {
        let rr = if rhs.sign < 0 { r.flip() } else { r };
        let inv = rhs.recip(rr);
        self.mul(&inv, r)
    }

    /// Integer power with directed rounding (k >= 0). For negative bases the
    /// direction is honored on the final signed value only when sensible；
    /// callers use nonnegative bases.
    pub fn pow(&self, k: u64, r: Round) -> Self {
        let mut acc = DyF::from_int(1);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, r);
            }
            base = base.mul(&base, r);
            e >>= 1;
        }
        acc
    }

    /// Square root of a nonnegative value with directed rounding.
    pub fn sqrt(&self, r: Round) -> Self {
        assert!(self.sign >= 0, "sqrt of negative");
        if self.sign == 0 {
            return DyF::zero();
        }
        // force even exponent and ~2*PRECISION mantissa bits
        let mut mant = self.mant.clone();
        let mut exp = self.exp;
        let want = 2 * PRECISION + 2;
        let have = mant.bits();
        let mut shift = if have < want { want - have } else { 0 };
        if (exp - shift as i128) % 2 != 0 {
            shift += 1;
        }
        mant <<= shift;
        exp -= shift as i128;
        let root = mant.sqrt();
        let exact = &root * &root == mant;
        let bump = r == Round::Up && !exact;
        let mut m = root;
        if bump {
            m += BigUint::one();
        }
        let mut v = DyF { sign: 1, mant: m, exp: exp / 2 };
        v.normalize(r);
        v
    }

    /// Exact comparison.
    pub fn cmp(&self, rhs: &DyF) -> Ordering {
        match self.sign.cmp(&rhs.sign) {
            Ordering::Equal => {}
            o => return o,
        }
        if self.sign == 0 {
            return Ordering::Equal;
        }
        let mag = mag_cmp(&self.mant, self.exp, &rhs.mant, rhs.exp);
        if self.sign > 0 {
            mag
        } else {
            mag.reverse()
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        let qs: i8 = match q.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        match self.sign.cmp(&qs) {
            Ordering::Equal => {}
            o => return o,
        }
        if self.sign == 0 {
            return Ordering::Equal;
        }
        // compare mant*2^exp*den against num, in magnitude
        let mag = mag_cmp(
            &(&self.mant * q.denom().magnitude()),
            self.exp,
            q.numer().magnitude(),
            0,
        );
        if self.sign > 0 {
            mag
        } else {
            mag.reverse()
        }
    }

    /// Exact rational value. `None` when the exponent is too wide to
    /// materialize (|exp| > 2^22 bits).
    pub fn to_rat(&self) -> Option<Rat> {
        if self.sign == 0 {
            return Some(Rat::zero());
        }
        if self.exp.unsigned_abs() > (1 << 22) {
            return None;
        }
        let m = BigInt::from_biguint(if self.sign < 0 { Sign::Minus } else { Sign::Plus }, self.mant.clone());
        Some(if self.exp >= 0 {
            Rat::from_integer(m << self.exp as u64)
        } else {
            Rat::new(m, BigInt::one() << (-self.exp) as u64)
        })
    }

    /// Nearest f64 (may under/overflow to 0/inf); verification layer only.
    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        if self.exp > 20_000 {
            return if self.sign > 0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if self.exp + (self.mant.bits() as i128) < -20_000 {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (m, e) = if bits > 64 {
            let m = (&self.mant >> (bits - 53)).to_u64().unwrap();
            (m as f64, self.exp + (bits - 53) as i128)
        } else {
            (self.mant.to_u64().unwrap() as f64, self.exp)
        };
        let v = m * 2f64.powi(e as i32);
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Canonical string `smant*2^exp` for transcripts.
    pub fn to_canonical_string(&self) -> String {
        if self.sign == 0 {
            "0".to_string()
        } else {
            format!("{}{}e{}", if self.sign < 0 { "-" } else { "" }, self.mant, self.exp)
        }
    }

    pub fn from_canonical_str(s: &str) -> Option<Self> {
        let s = s.trim();
        if s == "0" {
            return Some(DyF::zero());
        }
        let (sign, rest) = if let Some(r) = s.strip_prefix('-') { (-1i8, r) } else { (1i8, s) };
        let (m, e) = rest.split_once('e')?;
        let mant: BigUint = m.parse().ok()?;
        let exp: i128 = e.parse().ok()?;
        if mant.is_zero() {
            return None;
        }
        let mut v = DyF { sign, mant, exp };
        v.normalize(Round::Up);
        Some(v)
    }
}

/// Upper bound on log2 magnitude: value fits in [2^(l-1), 2^l).
fn mag_log2_hi(v: &DyF) -> i128 {
    v.mant.bits() as i128 + v.exp
}

fn mag_cmp(a: &BigUint, x: i128, b: &BigUint, y: i128) -> Ordering {
    let la = a.bits() as i128 + x;
    let lb = b.bits() as i128 + y;
    match la.cmp(&lb) {
        Ordering::Equal => {}
        o => return o,
    }
    // identical bit windows: align and compare exactly; the shift is bounded
    // by the mantissa widths
    let gap = x - y;
    if gap >= 0 {
        (a << gap as u64).cmp(b)
    } else {
        a.cmp(&(b << (-gap) as u64))
    }
}

/// Closed interval with certified endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enc {
    pub lo: DyF,
    pub hi: DyF,
}

impl Enc {
    pub fn zero() -> Self {
        Enc { lo: DyF::zero(), hi: DyF::zero() }
    }

    pub fn point_int(n: i64) -> Self {
        let v = DyF::from_int(n);
        Enc { lo: v.clone(), hi: v }
    }

    pub fn from_rat(q: &Rat) -> Self {
        Enc { lo: DyF::from_rat(q, Round::Down), hi: DyF::from_rat(q, Round::Up) }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn add(&self, rhs: &Enc) -> Enc {
        Enc { lo: self.lo.add(&rhs.lo, Round::Down), hi: self.hi.add(&rhs.hi, Round::Up) }
    }

    pub fn sub(&self, rhs: &Enc) -> Enc {
        Enc { lo: self.lo.sub(&rhs.hi, Round::Down), hi: self.hi.sub(&rhs.lo, Round::Up) }
    }

    pub fn neg(&self) -> Enc {
        Enc { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn mul(&self, rhs: &Enc) -> Enc {
        let cands_lo = [
            self.lo.mul(&rhs.lo, Round::Down),
            self.lo.mul(&rhs.hi, Round::Down),
            self.hi.mul(&rhs.lo, Round::Down),
            self.hi.mul(&rhs.hi, Round::Down),
        ];
        let cands_hi = [
            self.lo.mul(&rhs.lo, Round::Up),
            self.lo.mul(&rhs.hi, Round::Up),
            self.hi.mul(&rhs.lo, Round::Up),
            self.hi.mul(&rhs.hi, Round::Up),
        ];
        let lo = cands_lo.iter().cloned().reduce(|a, b| if a.cmp(&b) == Ordering::Less { a } else { b }).unwrap();
        let hi = cands_hi.iter().cloned().reduce(|a, b| if a.cmp(&b) == Ordering::Greater { a } else { b }).unwrap();
        Enc { lo, hi }
    }

    pub fn mul_pow2(&self, e: i128) -> Enc {
        Enc { lo: self.lo.mul_pow2(e), hi: self.hi.mul_pow2(e) }
    }

    pub fn scale_rat(&self, q: &Rat) -> Enc {
        self.mul(&Enc::from_rat(q))
    }

    pub fn scale_bigint(&self, n: &BigInt) -> Enc {
        let f = DyF::from_bigint_rounded(n, Round::Down);
        let g = DyF::from_bigint_rounded(n, Round::Up);
        self.mul(&Enc { lo: f, hi: g })
    }

    /// Upper bound on |x| over the interval.
    pub fn mag_ub(&self) -> DyF {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a.cmp(&b) == Ordering::Greater {
            a
        } else {
            b
        }
    }

    /// Lower bound on |x| over the interval (0 if the interval straddles 0).
    pub fn mag_lb(&self) -> DyF {
        if self.lo.sign() <= 0 && self.hi.sign() >= 0 {
            return DyF::zero();
        }
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a.cmp(&b) == Ordering::Less {
            a
        } else {
            b
        }
    }

    pub fn contains_rat(&self, q: &Rat) -> bool {
        self.lo.cmp_rat(q) != Ordering::Greater && self.hi.cmp_rat(q) != Ordering::Less
    }

    pub fn mid_f64(&self) -> f64 {
        0.5 * (self.lo.to_f64() + self.hi.to_f64())
    }
}

/// Complex interval, componentwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CEnc {
    pub re: Enc,
    pub im: Enc,
}

impl CEnc {
    pub fn zero() -> Self {
        CEnc { re: Enc::zero(), im: Enc::zero() }
    }

    pub fn from_gauss(z: &super::gauss::GaussRat) -> Self {
        CEnc { re: Enc::from_rat(&z.re), im: Enc::from_rat(&z.im) }
    }

    pub fn add(&self, rhs: &CEnc) -> CEnc {
        CEnc { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &CEnc) -> CEnc {
        CEnc { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn mul(&self, rhs: &CEnc) -> CEnc {
        CEnc {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    pub fn mul_pow2(&self, e: i128) -> CEnc {
        CEnc { re: self.re.mul_pow2(e), im: self.im.mul_pow2(e) }
    }

    pub fn scale_bigint(&self, n: &BigInt) -> CEnc {
        CEnc { re: self.re.scale_bigint(n), im: self.im.scale_bigint(n) }
    }

    pub fn scale_gauss(&self, z: &super::gauss::GaussRat) -> CEnc {
        self.mul(&CEnc::from_gauss(z))
    }

    /// Certified upper bound on the modulus.
    pub fn mag_ub(&self) -> DyF {
        let r = self.re.mag_ub();
        let i = self.im.mag_ub();
        let s = r.mul(&r, Round::Up).add(&i.mul(&i, Round::Up), Round::Up);
        s.sqrt(Round::Up)
    }

    /// Certified lower bound on the modulus.
    pub fn mag_lb(&self) -> DyF {
        let r = self.re.mag_lb();
        let i = self.im.mag_lb();
        let s = r.mul(&r, Round::Down).add(&i.mul(&i, Round::Down), Round::Down);
        s.sqrt(Round::Down)
    }

    pub fn mid_complex_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat_i64;

    #[test]
    fn directed_rounding_brackets_truth() {
        let third = rat_i64(1, 3);
        let lo = DyF::from_rat(&third, Round::Down);
        let hi = DyF::from_rat(&third, Round::Up);
        assert_eq!(lo.cmp_rat(&third), Ordering::Less);
        assert_eq!(hi.cmp_rat(&third), Ordering::Greater);
        assert_eq!(lo.cmp(&hi), Ordering::Less);
    }

    #[test]
    fn huge_exponent_arithmetic() {
        let tiny = DyF::pow2(-1_000_000_000);
        let one = DyF::from_int(1);
        let s = one.add(&tiny, Round::Up);
        assert_eq!(s.cmp(&one), Ordering::Greater);
        let s2 = one.add(&tiny, Round::Down);
        assert_eq!(s2.cmp(&one), Ordering::Equal); // absorbed downward
        let p = tiny.pow(3, Round::Up);
        assert_eq!(p.exponent(), -3_000_000_000);
    }

    #[test]
    fn add_exact_small() {
        let a = DyF::from_int(5);
        let b = DyF::from_int(-3);
        assert_eq!(a.add(&b, Round::Up), DyF::from_int(2));
        assert_eq!(a.add(&b, Round::Down), DyF::from_int(2));
    }

    #[test]
    fn sqrt_brackets() {
        let two = DyF::from_int(2);
        let lo = two.sqrt(Round::Down);
        let hi = two.sqrt(Round::Up);
        assert!(lo.mul(&lo, Round::Up).cmp(&two) != Ordering::Greater);
        assert!(hi.mul(&hi, Round::Down).cmp(&two) != Ordering::Less);
    }

    #[test]
    fn pow_and_div_monotone() {
        let r = DyF::from_rat(&rat_i64(10, 3), Round::Up);
        let p_up = r.pow(7, Round::Up);
        let p_dn = DyF::from_rat(&rat_i64(10, 3), Round::Down).pow(7, Round::Down);
        assert!(p_dn.cmp(&p_up) == Ordering::Less);
        let q = p_up.div(&r, Round::Up);
        assert!(q.cmp(&p_up) == Ordering::Less);
    }

    #[test]
    fn canonical_string_roundtrip() {
        let v = DyF::from_rat(&rat_i64(-355, 113), Round::Down);
        let s = v.to_canonical_string();
        assert_eq!(DyF::from_canonical_str(&s).unwrap(), v);
        assert_eq!(DyF::from_canonical_str("0").unwrap(), DyF::zero());
    }

    #[test]
    fn enc_mul_contains_product() {
        let a = Enc::from_rat(&rat_i64(22, 7));
        let b = Enc::from_rat(&rat_i64(-13, 9));
        let p = a.mul(&b);
        let truth = rat_i64(22, 7) * rat_i64(-13, 9);
        assert!(p.contains_rat(&truth));
    }

    #[test]
    fn cenc_mag_bounds() {
        let z = CEnc::from_gauss(&crate::exactalg::gauss::GaussRat::new(rat_i64(3, 1), rat_i64(4, 1)));
        let ub = z.mag_ub();
        let lb = z.mag_lb();
        assert!(ub.cmp_rat(&rat_i64(5, 1)) != Ordering::Less);
        assert!(lb.cmp_rat(&rat_i64(5, 1)) != Ordering::Greater);
        assert!(ub.cmp_rat(&rat_i64(501, 100)) == Ordering::Less);
        assert!(lb.cmp_rat(&rat_i64(499, 100)) == Ordering::Greater);
    }
}
