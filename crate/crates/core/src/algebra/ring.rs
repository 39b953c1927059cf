//! The common ring interface and the tagged [`RingValue`].

use alloc::string::String;
use core::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::{int, to_f64, Rational};
use crate::error::{Error, Result};

/// Exact (or, for `Complex64`, double precision) commutative ring arithmetic.
///
/// Ring elements may carry context such as a variable name, so constants are
/// produced "like" an existing element.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn rational_like(&self, r: &Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, where one exists and the ring can express it.
    fn try_inverse(&self) -> Result<Self>;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&self.rational_like(r))
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::NotInvertible("zero"));
        }
        Ok(self.recip())
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.var())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.var())
    }
    fn rational_like(&self, r: &Rational) -> Self {
        Poly::constant(self.var(), r.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn try_inverse(&self) -> Result<Self> {
        RingValue::Poly(self.clone()).try_recip().map(|v| match v {
            RingValue::Poly(p) => p,
            _ => unreachable!(),
        })
    }
    fn scale(&self, r: &Rational) -> Self {
        Poly::scale(self, r)
    }
    fn pow(&self, n: u32) -> Self {
        Poly::pow(self, n)
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars())
    }
    fn rational_like(&self, r: &Rational) -> Self {
        MultiPoly::constant(self.vars(), r.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn try_inverse(&self) -> Result<Self> {
        RingValue::Multi(self.clone()).try_recip().map(|v| match v {
            RingValue::Multi(p) => p,
            _ => unreachable!(),
        })
    }
    fn scale(&self, r: &Rational) -> Self {
        MultiPoly::scale(self, r)
    }
    fn pow(&self, n: u32) -> Self {
        MultiPoly::pow(self, n)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::constant(self.var(), Rational::zero())
    }
    fn one_like(&self) -> Self {
        RatFunc::constant(self.var(), Rational::one())
    }
    fn rational_like(&self, r: &Rational) -> Self {
        RatFunc::constant(self.var(), r.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn try_inverse(&self) -> Result<Self> {
        self.recip()
    }
    fn scale(&self, r: &Rational) -> Self {
        RatFunc::scale(self, r)
    }
    fn pow(&self, n: u32) -> Self {
        RatFunc::pow(self, n)
    }
}

impl Ring for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn rational_like(&self, r: &Rational) -> Self {
        Complex64::new(to_f64(r), 0.0)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn try_inverse(&self) -> Result<Self> {
        if Ring::is_zero(self) {
            return Err(Error::NotInvertible("zero"));
        }
        Ok(self.inv())
    }
}

/// `x (x+1) ... (x+n-1)`; the ring one when `n = 0`.
pub fn pochhammer<R: Ring>(x: &R, n: u32) -> R {
    let mut acc = x.one_like();
    for i in 0..n {
        acc = acc.mul_ref(&x.add_ref(&x.rational_like(&int(i64::from(i)))));
    }
    acc
}

/// Which ring a [`RingValue`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Rational,
    Poly,
    Multi,
    RatFunc,
    Complex,
}

/// A value in one of the supported coefficient rings.
#[derive(Clone, Debug, PartialEq)]
pub enum RingValue {
    Rational(Rational),
    Poly(Poly),
    Multi(MultiPoly),
    RatFunc(RatFunc),
    Complex(Complex64),
}

macro_rules! binary {
    ($self:ident, $other:ident, $a:ident, $b:ident, $e:expr) => {
        match ($self, $other) {
            (RingValue::Rational($a), RingValue::Rational($b)) => Ok(RingValue::Rational($e)),
            (RingValue::Poly($a), RingValue::Poly($b)) => {
                $a.check_compatible($b)?;
                Ok(RingValue::Poly($e))
            }
            (RingValue::Multi($a), RingValue::Multi($b)) => {
                $a.check_compatible($b)?;
                Ok(RingValue::Multi($e))
            }
            (RingValue::RatFunc($a), RingValue::RatFunc($b)) => {
                $a.check_compatible($b)?;
                Ok(RingValue::RatFunc($e))
            }
            (RingValue::Complex($a), RingValue::Complex($b)) => Ok(RingValue::Complex($e)),
            (l, r) => Err(Error::RingMismatch { left: l.tag(), right: r.tag() }),
        }
    };
}

impl RingValue {
    pub fn tag(&self) -> RingTag {
        match self {
            RingValue::Rational(_) => RingTag::Rational,
            RingValue::Poly(_) => RingTag::Poly,
            RingValue::Multi(_) => RingTag::Multi,
            RingValue::RatFunc(_) => RingTag::RatFunc,
            RingValue::Complex(_) => RingTag::Complex,
        }
    }

    pub fn try_add(&self, other: &RingValue) -> Result<RingValue> {
        binary!(self, other, a, b, a.add_ref(b))
    }

    pub fn try_mul(&self, other: &RingValue) -> Result<RingValue> {
        binary!(self, other, a, b, a.mul_ref(b))
    }

    pub fn try_sub(&self, other: &RingValue) -> Result<RingValue> {
        self.try_add(&other.neg_ref())
    }

    /// Error unless `other` lives in the same ring (and variables are compatible).
    pub fn check_compatible(&self, other: &RingValue) -> Result<()> {
        self.try_add(other).map(|_| ())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RingValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            RingValue::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_multi(&self) -> Option<&MultiPoly> {
        match self {
            RingValue::Multi(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            RingValue::RatFunc(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            RingValue::Complex(z) => Some(*z),
            _ => None,
        }
    }

    /// Multiplicative inverse where the ring has one for this element.
    pub fn try_recip(&self) -> Result<RingValue> {
        match self {
            RingValue::Rational(r) if Zero::is_zero(r) => Err(Error::NotInvertible("zero")),
            RingValue::Rational(r) => Ok(RingValue::Rational(r.recip())),
            RingValue::Poly(p) if p.is_constant() && !p.is_zero() => {
                Ok(RingValue::Poly(Poly::constant(p.var(), p.coeff(0).recip())))
            }
            RingValue::Multi(p) if p.is_constant() && !p.is_zero() => {
                Ok(RingValue::Multi(MultiPoly::constant(p.vars(), p.constant_term().recip())))
            }
            RingValue::Poly(p) if p.is_zero() => Err(Error::NotInvertible("zero")),
            RingValue::Multi(p) if p.is_zero() => Err(Error::NotInvertible("zero")),
            RingValue::Poly(_) | RingValue::Multi(_) => Err(Error::Unsupported("inverse of a non-constant polynomial")),
            RingValue::RatFunc(f) => f.recip().map(RingValue::RatFunc),
            RingValue::Complex(z) if Ring::is_zero(z) => Err(Error::NotInvertible("zero")),
            RingValue::Complex(z) => Ok(RingValue::Complex(z.inv())),
        }
    }

    /// The value as an exact rational when it is a constant of any exact ring.
    pub fn constant_value(&self) -> Option<Rational> {
        match self {
            RingValue::Rational(r) => Some(r.clone()),
            RingValue::Poly(p) if p.is_constant() => Some(p.coeff(0)),
            RingValue::Multi(p) if p.is_constant() => Some(p.constant_term()),
            RingValue::RatFunc(f) if f.is_constant() => Some(f.numer().coeff(0)),
            _ => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            RingValue::Rational(r) => alloc::format!("{r}"),
            RingValue::Poly(p) => p.render(),
            RingValue::Multi(p) => p.render(),
            RingValue::RatFunc(f) => f.render(),
            RingValue::Complex(z) => alloc::format!("{z}"),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Rational> for RingValue {
    fn from(r: Rational) -> Self {
        RingValue::Rational(r)
    }
}

impl From<Poly> for RingValue {
    fn from(p: Poly) -> Self {
        RingValue::Poly(p)
    }
}

impl From<MultiPoly> for RingValue {
    fn from(p: MultiPoly) -> Self {
        RingValue::Multi(p)
    }
}

impl From<RatFunc> for RingValue {
    fn from(f: RatFunc) -> Self {
        RingValue::RatFunc(f)
    }
}

impl From<Complex64> for RingValue {
    fn from(z: Complex64) -> Self {
        RingValue::Complex(z)
    }
}

/// Panicking arithmetic for callers that have already checked tags with
/// [`RingValue::check_compatible`]. Use the `try_*` methods otherwise.
impl Ring for RingValue {
    fn zero_like(&self) -> Self {
        match self {
            RingValue::Rational(r) => RingValue::Rational(r.zero_like()),
            RingValue::Poly(p) => RingValue::Poly(p.zero_like()),
            RingValue::Multi(p) => RingValue::Multi(p.zero_like()),
            RingValue::RatFunc(f) => RingValue::RatFunc(f.zero_like()),
            RingValue::Complex(z) => RingValue::Complex(z.zero_like()),
        }
    }
    fn one_like(&self) -> Self {
        match self {
            RingValue::Rational(r) => RingValue::Rational(r.one_like()),
            RingValue::Poly(p) => RingValue::Poly(p.one_like()),
            RingValue::Multi(p) => RingValue::Multi(p.one_like()),
            RingValue::RatFunc(f) => RingValue::RatFunc(f.one_like()),
            RingValue::Complex(z) => RingValue::Complex(z.one_like()),
        }
    }
    fn rational_like(&self, c: &Rational) -> Self {
        match self {
            RingValue::Rational(r) => RingValue::Rational(r.rational_like(c)),
            RingValue::Poly(p) => RingValue::Poly(p.rational_like(c)),
            RingValue::Multi(p) => RingValue::Multi(p.rational_like(c)),
            RingValue::RatFunc(f) => RingValue::RatFunc(f.rational_like(c)),
            RingValue::Complex(z) => RingValue::Complex(z.rational_like(c)),
        }
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring values from different rings")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring values from different rings")
    }
    fn neg_ref(&self) -> Self {
        match self {
            RingValue::Rational(r) => RingValue::Rational(-r),
            RingValue::Poly(p) => RingValue::Poly(-p),
            RingValue::Multi(p) => RingValue::Multi(-p),
            RingValue::RatFunc(f) => RingValue::RatFunc(-f),
            RingValue::Complex(z) => RingValue::Complex(-z),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            RingValue::Rational(r) => Zero::is_zero(r),
            RingValue::Poly(p) => p.is_zero(),
            RingValue::Multi(p) => p.is_zero(),
            RingValue::RatFunc(f) => f.is_zero(),
            RingValue::Complex(z) => Ring::is_zero(z),
        }
    }
    fn try_inverse(&self) -> Result<Self> {
        self.try_recip()
    }
    fn scale(&self, c: &Rational) -> Self {
        match self {
            RingValue::Rational(r) => RingValue::Rational(r * c),
            RingValue::Poly(p) => RingValue::Poly(p.scale(c)),
            RingValue::Multi(p) => RingValue::Multi(p.scale(c)),
            RingValue::RatFunc(f) => RingValue::RatFunc(f.scale(c)),
            RingValue::Complex(z) => RingValue::Complex(z * to_f64(c)),
        }
    }
    fn pow(&self, n: u32) -> Self {
        match self {
            RingValue::Rational(r) => RingValue::Rational(Ring::pow(r, n)),
            RingValue::Poly(p) => RingValue::Poly(p.pow(n)),
            RingValue::Multi(p) => RingValue::Multi(p.pow(n)),
            RingValue::RatFunc(f) => RingValue::RatFunc(f.pow(n)),
            RingValue::Complex(z) => RingValue::Complex(z.powu(n)),
        }
    }
}

/// Evaluate a polynomial, rational function or constant at a complex point.
pub fn poly_eval(value: &RingValue, at: Complex64) -> Result<Complex64> {
    match value {
        RingValue::Rational(r) => Ok(Complex64::new(to_f64(r), 0.0)),
        RingValue::Poly(p) => Ok(p.eval_complex(at)),
        RingValue::RatFunc(f) => f.eval_complex(at),
        RingValue::Complex(z) => Ok(*z),
        RingValue::Multi(_) => Err(Error::Unsupported("univariate evaluation of a multivariate polynomial")),
    }
}
