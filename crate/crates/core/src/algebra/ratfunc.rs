//! Univariate rational functions over the rationals.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::poly::{forward_owned, Poly, Symbol};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Relative size below which a denominator is treated as vanishing.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Normalize `num / den`: cancel the gcd and make the denominator monic.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible("zero denominator"));
        }
        num.try_add(&den)?;
        let var = if num.is_constant() { den.var() } else { num.var() };
        let g = Poly::gcd(&num, &den);
        let (num, den) =
            if g.is_zero() || g.is_constant() { (num, den) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
        Ok(RatFunc::scale_monic(num.with_var(var), den.with_var(var)))
    }

    /// Build from a pair already known to be coprime; only the monic scaling is applied.
    pub fn from_coprime(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let var = if num.is_constant() { den.var() } else { num.var() };
        RatFunc::scale_monic(num.with_var(var), den.with_var(var))
    }

    fn scale_monic(num: Poly, den: Poly) -> Self {
        let lead = den.leading();
        if lead.is_one() {
            return RatFunc { num, den };
        }
        let inv = lead.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFunc { num: p, den: Poly::one(var) }
    }

    pub fn constant(var: Symbol, c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(var, c))
    }

    pub fn var(&self) -> Symbol {
        self.den.var()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::NotInvertible("zero rational function"));
        }
        Ok(RatFunc::scale_monic(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RatFunc { num: self.num.pow(n), den: self.den.pow(n) }
    }

    pub fn eval_rational(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(z);
        if d.norm() <= POLE_TOLERANCE * self.den.magnitude_at(z) {
            return Err(Error::Pole);
        }
        Ok(self.num.eval_complex(z) / d)
    }

    /// Error unless both functions are in the same variable (constants fit anything).
    pub fn check_compatible(&self, other: &RatFunc) -> Result<()> {
        if self.is_constant() || other.is_constant() || self.var() == other.var() {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.var().0.into(), right: other.var().0.into() })
        }
    }

    pub fn try_add(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    /// `num / den` with both sides in canonical polynomial form.
    pub fn render(&self) -> String {
        if self.den.is_constant() {
            return self.num.render();
        }
        alloc::format!("({})/({})", self.num.render(), self.den.render())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        let a = self.den.exact_div(&g).expect("gcd divides");
        let b = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RatFunc::new(num, &self.den * &b).expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::constant(self.var(), Rational::zero());
        }
        // Cross-cancel so the product stays reduced without a gcd of the full product.
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RatFunc::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

forward_owned!(RatFunc, Add, add);
forward_owned!(RatFunc, Sub, sub);
forward_owned!(RatFunc, Mul, mul);
