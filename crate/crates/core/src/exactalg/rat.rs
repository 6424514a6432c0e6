//! Helpers on arbitrary-precision rationals.

use num::bigint::{BigInt, BigUint, Sign};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Exact rational number, the scalar field for the real and imaginary parts
/// of every coefficient in the construction layer.
pub type Rat = BigRational;

/// Parse a rational from `"a"` or `"a/b"` with optional sign.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rat::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(num))
    }
}

/// Canonical string form `a/b` (denominator kept even when 1, so round trips
/// are byte exact).
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_i64(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Smallest integer >= r.
pub fn rat_ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// Largest integer <= r.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// r^k for signed k; errors never occur for r != 0. r == 0 with k < 0 panics.
pub fn rat_pow(r: &Rat, k: i64) -> Rat {
    if k >= 0 {
        num::traits::Pow::pow(r.clone(), k as u64)
    } else {
        let p = num::traits::Pow::pow(r.clone(), (-k) as u64);
        p.recip()
    }
}

/// Integer square root: largest s with s*s <= n.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Rational upper bound on sqrt(r) for r >= 0, within relative error
/// 2^(1-bits). Computed by scaling to an integer square root with outward
/// rounding, so `result^2 >= r` holds exactly.
pub fn rat_sqrt_ub(r: &Rat, bits: u32) -> Rat {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return Rat::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale n*d by 4^bits, take floor sqrt and add 1.
    let n = r.numer().magnitude() * r.denom().magnitude();
    let scale = BigUint::one() << (2 * bits as usize);
    let root = isqrt(&(&n * &scale)) + BigUint::one();
    let den = r.denom().magnitude() * (BigUint::one() << bits as usize);
    Rat::new(
        BigInt::from_biguint(Sign::Plus, root),
        BigInt::from_biguint(Sign::Plus, den),
    )
}

/// Rational lower bound on sqrt(r) for r >= 0: `result^2 <= r` exactly.
pub fn rat_sqrt_lb(r: &Rat, bits: u32) -> Rat {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return Rat::zero();
    }
    let n = r.numer().magnitude() * r.denom().magnitude();
    let scale = BigUint::one() << (2 * bits as usize);
    let root = isqrt(&(&n * &scale));
    let den = r.denom().magnitude() * (BigUint::one() << bits as usize);
    Rat::new(
        BigInt::from_biguint(Sign::Plus, root),
        BigInt::from_biguint(Sign::Plus, den),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3/4", "-7/2", "5", "0"] {
            let r = rat_from_str(s).unwrap();
            let t = rat_to_string(&r);
            assert_eq!(rat_from_str(&t).unwrap(), r);
        }
        assert!(rat_from_str("1/0").is_none());
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let r = rat_i64(2, 1);
        let ub = rat_sqrt_ub(&r, 32);
        let lb = rat_sqrt_lb(&r, 32);
        assert!(&ub * &ub >= r);
        assert!(&lb * &lb <= r);
        assert!(&ub - &lb < rat_i64(1, 1_000_000));
    }

    #[test]
    fn sqrt_exact_on_perfect_squares() {
        let r = rat_i64(25, 1);
        assert_eq!(rat_sqrt_lb(&r, 8), rat_i64(5, 1));
        // upper bound is outward by one scaled ulp
        let ub = rat_sqrt_ub(&r, 8);
        assert!(ub >= rat_i64(5, 1) && ub <= rat_i64(5 * 257, 256));
    }

    #[test]
    fn ceil_floor() {
        assert_eq!(rat_ceil(&rat_i64(7, 2)), BigInt::from(4));
        assert_eq!(rat_floor(&rat_i64(7, 2)), BigInt::from(3));
        assert_eq!(rat_ceil(&rat_i64(-7, 2)), BigInt::from(-3));
    }
}
