//! Exact rationals and the small integer helpers shared by every module.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Table of `0!, 1!, ..., n!`.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for i in 1..=n {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(-1)^n` as a rational.
pub fn sign_pow(n: usize) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Nearest double to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| if r.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// True when the rational has denominator one.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
