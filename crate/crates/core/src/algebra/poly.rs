//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::{int, to_f64, Rational};
use crate::error::{Error, Result};

/// Name of a polynomial variable. Names are static so values stay cheap to copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub &'static str);

impl Symbol {
    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// `c0 + c1*x + ... + cn*x^n` with `cn != 0`; the zero polynomial has no coefficients.
///
/// Constant polynomials do not depend on their variable, so arithmetic between a
/// constant and a polynomial in another variable adopts the non-constant variable.
/// Combining two non-constant polynomials in different variables panics; use
/// [`Poly::try_add`] and friends for a checked version.
#[derive(Clone, Debug)]
pub struct Poly {
    var: Symbol,
    coeffs: Vec<Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.coeffs.len() <= 1 || self.var == other.var)
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn new(var: Symbol, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn from_ints(var: Symbol, coeffs: &[i64]) -> Self {
        Poly::new(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(var: Symbol) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Symbol) -> Self {
        Poly::constant(var, Rational::one())
    }

    pub fn constant(var: Symbol, c: Rational) -> Self {
        Poly::new(var, vec![c])
    }

    /// The polynomial `x` itself.
    pub fn x(var: Symbol) -> Self {
        Poly::monomial(var, Rational::one(), 1)
    }

    pub fn monomial(var: Symbol, c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(var, coeffs)
    }

    /// `x + c`.
    pub fn linear(var: Symbol, c: Rational) -> Self {
        Poly::new(var, vec![c, Rational::one()])
    }

    pub fn var(&self) -> Symbol {
        self.var
    }

    pub fn with_var(mut self, var: Symbol) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.var);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a complex point with double precision coefficients.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(to_f64(c), 0.0);
        }
        acc
    }

    /// Sum of `|c_i| |z|^i`, the scale used to decide whether a value is numerically zero.
    pub fn magnitude_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * r + to_f64(c).abs();
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::NotInvertible("zero polynomial divisor"))?;
        let var = self.pick_var(d);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(var), Poly::new(var, rem)));
        }
        let lead_inv = d.leading().recip();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(var, quot), Poly::new(var, rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic();
        }
        x
    }

    /// Divide out `(x + m)` as often as it divides `self`; returns the quotient and multiplicity.
    pub fn strip_linear_factor(&self, m: &Rational) -> (Poly, u32) {
        let root = -m.clone();
        let mut p = self.clone();
        let mut count = 0;
        while !p.is_zero() && p.eval(&root).is_zero() {
            p = p.synthetic_div(&root);
            count += 1;
        }
        (p, count)
    }

    /// Quotient of division by `(x - r)`, ignoring the remainder.
    fn synthetic_div(&self, r: &Rational) -> Poly {
        let n = self.coeffs.len();
        if n <= 1 {
            return Poly::zero(self.var);
        }
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + carry * r;
            q[i - 1] = carry.clone();
        }
        Poly::new(self.var, q)
    }

    /// `p(x + s)`.
    pub fn shift(&self, s: &Rational) -> Poly {
        let lin = Poly::linear(self.var, s.clone());
        let mut acc = Poly::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(self.var, c.clone());
        }
        acc
    }

    fn pick_var(&self, other: &Poly) -> Symbol {
        if self.is_constant() {
            other.var
        } else {
            self.var
        }
    }

    pub fn check_compatible(&self, other: &Poly) -> Result<()> {
        if self.is_constant() || other.is_constant() || self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.var.0.into(), right: other.var.0.into() })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    /// Canonical text with an explicit variable name.
    pub fn render(&self) -> String {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => String::from(self.var.0),
                _ => alloc::format!("{}^{}", self.var.0, i),
            };
            (c.clone(), mono)
        });
        render_terms(terms)
    }
}

/// Joins `(coefficient, monomial)` pairs into `c0 + c1*m1 - c2*m2` form.
pub(crate) fn render_terms<I: IntoIterator<Item = (Rational, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&alloc::format!("{mag}"));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&alloc::format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.check_compatible(rhs).is_ok(), "adding polynomials in {} and {}", self.var, rhs.var);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(self.pick_var(rhs), out)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.check_compatible(rhs).is_ok(), "multiplying polynomials in {} and {}", self.var, rhs.var);
        let var = self.pick_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(var);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(var, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                $tr::$m(&self, rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Poly, Add, add);
forward_owned!(Poly, Sub, sub);
forward_owned!(Poly, Mul, mul);
