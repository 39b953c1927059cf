//! Named coefficient families: cosecant, secant and reciprocal logarithm
//! numbers, their powers, and the reciprocal Bessel coefficients `h_k(ν)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::rational::{binomial, factorial, factorials, sign_pow, to_f64, Rational};
use crate::algebra::{Poly, RatFunc, Ring, RingValue, Symbol};
use crate::error::{Error, Result};
use crate::operator::stirling_first_row;
use crate::series::{expand, expand_power, Outer, SeriesSpec};

/// Variable of the Bessel coefficients.
pub const NU: Symbol = Symbol("nu");
/// Variable of the generalized families.
pub const RHO: Symbol = Symbol("rho");

/// The three rational families produced by a geometric-type outer series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `s csc s = Σ c_k s^{2k}`.
    Cosecant,
    /// `sec s = Σ d_k s^{2k}`.
    Secant,
    /// `z / ln(1+z) = Σ A_k z^k`.
    ReciprocalLog,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Cosecant, Family::Secant, Family::ReciprocalLog];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cosecant => "cosecant",
            Family::Secant => "secant",
            Family::ReciprocalLog => "reciprocal-log",
        }
    }

    /// Inner coefficient `p_i`, `i >= 1`.
    pub fn inner(self, i: usize) -> Rational {
        let fact = |n: usize| Rational::from_integer(factorial(n as u64));
        match self {
            Family::Cosecant => -sign_pow(i) / fact(2 * i + 1),
            Family::Secant => -sign_pow(i) / fact(2 * i),
            Family::ReciprocalLog => sign_pow(i) / Rational::from_integer(BigInt::from(i + 1)),
        }
    }

    /// Outer coefficient `q_N`.
    pub fn outer(self, n: usize) -> Rational {
        match self {
            Family::Cosecant | Family::Secant => Rational::one(),
            Family::ReciprocalLog => sign_pow(n),
        }
    }

    /// Coefficients `t_k` of the series whose reciprocal generates the family:
    /// `sin s / s`, `cos s` and `ln(1+z)/z`.
    pub fn reciprocal_series(self, kmax: usize) -> Vec<Rational> {
        let fact = factorials(2 * kmax + 1);
        (0..=kmax)
            .map(|k| match self {
                Family::Cosecant => sign_pow(k) / Rational::from_integer(fact[2 * k + 1].clone()),
                Family::Secant => sign_pow(k) / Rational::from_integer(fact[2 * k].clone()),
                Family::ReciprocalLog => sign_pow(k) / Rational::from_integer(BigInt::from(k + 1)),
            })
            .collect()
    }

    pub fn spec(self, kmax: usize) -> SeriesSpec<Rational> {
        let inner = (1..=kmax).map(|i| self.inner(i)).collect();
        let q = (0..=kmax).map(|n| self.outer(n)).collect();
        SeriesSpec::new(inner, Outer::Q { q, a: Rational::one() }, kmax).expect("tables cover kmax")
    }

    /// Values for `k = 0..=kmax` by the partition operator.
    pub fn table(self, kmax: usize) -> Vec<Rational> {
        expand(&self.spec(kmax))
    }

    /// Values for `k = 0..=kmax` by the family's recurrence,
    /// `x_k = -Σ_{j<k} t_{k-j} x_j` with `x_0 = 1`.
    pub fn recurrence_table(self, kmax: usize) -> Vec<Rational> {
        let t = self.reciprocal_series(kmax);
        let mut out: Vec<Rational> = Vec::with_capacity(kmax + 1);
        out.push(Rational::one());
        for k in 1..=kmax {
            let mut acc = Rational::zero();
            for (j, x) in out.iter().enumerate() {
                acc -= &t[k - j] * x;
            }
            out.push(acc);
        }
        out
    }
}

pub fn cosecant(k: usize) -> Rational {
    Family::Cosecant.table(k).pop().unwrap()
}

pub fn secant(k: usize) -> Rational {
    Family::Secant.table(k).pop().unwrap()
}

pub fn reciprocal_log(k: usize) -> Rational {
    Family::ReciprocalLog.table(k).pop().unwrap()
}

/// `A_k = (1/k!) Σ_{j=1}^{k} S_k^{(j)} / (j+1)` with signed Stirling numbers of the first kind.
pub fn reciprocal_log_stirling(k: u32) -> Rational {
    let row = stirling_first_row(k);
    let mut acc = Rational::zero();
    for (j, s) in row.iter().enumerate().skip(1) {
        acc += Rational::new(s.clone(), BigInt::from(j + 1));
    }
    if k == 0 {
        return Rational::one();
    }
    acc / Rational::from_integer(factorial(k as u64))
}

/// How a generalized family is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneralizedRoute {
    /// Power `ρ` of the base numbers' series.
    BaseNumbers,
    /// Power `-ρ` of the reciprocal series.
    InnerCoefficients,
}

/// Coefficients of the family's generating function raised to `ρ`, for `k = 0..=kmax`.
pub fn generalized_table<R: Ring>(family: Family, rho: &R, kmax: usize, route: GeneralizedRoute) -> Result<Vec<R>> {
    let lift = |v: Vec<Rational>| -> Vec<R> { v.iter().map(|x| rho.rational_like(x)).collect() };
    match route {
        GeneralizedRoute::BaseNumbers => expand_power(&lift(family.table(kmax)), rho),
        GeneralizedRoute::InnerCoefficients => expand_power(&lift(family.reciprocal_series(kmax)), &rho.neg_ref()),
    }
}

/// `c_{ρ,k}`, `d_{ρ,k}` or `A_k(ρ)` as polynomials in `ρ`, `k = 0..=kmax`.
pub fn generalized(family: Family, kmax: usize) -> Vec<Poly> {
    generalized_table(family, &Poly::x(RHO), kmax, GeneralizedRoute::BaseNumbers).expect("D_0 = 1")
}

/// `k! Π_{m=1}^{k} (ν+m)^{⌊k/m⌋}`, the common denominator of `h_k(ν)`.
pub fn bessel_denominator(k: u32) -> Poly {
    let mut den = Poly::constant(NU, Rational::from_integer(factorial(k as u64)));
    for m in 1..=k {
        den = &den * &Poly::linear(NU, Rational::from_integer(BigInt::from(m))).pow(k / m);
    }
    den
}

/// `h_0(ν), ..., h_kmax(ν)` from an integer recurrence for the numerators over
/// [`bessel_denominator`].
pub fn bessel_h_table(kmax: usize) -> Vec<RatFunc> {
    let lin: Vec<Poly> = (0..=kmax).map(|m| Poly::linear(NU, Rational::from_integer(BigInt::from(m)))).collect();
    let mut nums: Vec<Poly> = vec![Poly::one(NU)];
    let mut out = vec![RatFunc::from_poly(Poly::one(NU))];
    for k in 1..=kmax as u32 {
        let mut acc = Poly::zero(NU);
        for (j, nj) in nums.iter().enumerate() {
            let j = j as u32;
            // (-1)^{k-j+1} C(k, j)
            let mut term = nj.scale(&Rational::from_integer(binomial(k as u64, j as u64)));
            if (k - j) % 2 == 0 {
                term = -term;
            }
            for m in 1..=k {
                let e = k / m - j / m - u32::from(m <= k - j);
                if e > 0 {
                    term = &term * &lin[m as usize].pow(e);
                }
            }
            acc = &acc + &term;
        }
        nums.push(acc.clone());
        let mut num = acc;
        let mut den = Poly::constant(NU, Rational::from_integer(factorial(k as u64)));
        for m in 1..=k {
            let e = k / m;
            let (q, c) = num.strip_linear_factor(&Rational::from_integer(BigInt::from(m)));
            let used = c.min(e);
            num = if used == c { q } else { &q * &lin[m as usize].pow(c - used) };
            if e > used {
                den = &den * &lin[m as usize].pow(e - used);
            }
        }
        out.push(RatFunc::from_coprime(num, den));
    }
    out
}

pub fn bessel_h(k: u32) -> RatFunc {
    bessel_h_table(k as usize).pop().unwrap()
}

/// Inner coefficients `(-1)^i / ((ν+1)_i i!)` in the variable `(z/2)^2`.
fn bessel_inner(kmax: usize) -> Vec<RatFunc> {
    let fact = factorials(kmax);
    let mut poch = Poly::one(NU);
    (1..=kmax)
        .map(|i| {
            poch = &poch * &Poly::linear(NU, Rational::from_integer(BigInt::from(i)));
            let den = poch.scale(&Rational::from_integer(fact[i].clone()));
            RatFunc::new(Poly::constant(NU, sign_pow(i)), den).expect("nonzero denominator")
        })
        .collect()
}

/// `h_k(ν)` by the partition operator over rational functions.
pub fn bessel_h_operator(kmax: usize) -> Vec<RatFunc> {
    let one = RatFunc::from_poly(Poly::one(NU));
    let q = (0..=kmax).map(|n| one.scale(&sign_pow(n))).collect();
    let spec = SeriesSpec::new(bessel_inner(kmax), Outer::Q { q, a: one }, kmax).expect("tables cover kmax");
    expand(&spec)
}

/// `h_k(ν) = Σ_{j<k} (-1)^{k-j+1} h_j / ((k-j)! (ν+1)_{k-j})` in rational-function arithmetic.
pub fn bessel_h_recurrence(kmax: usize) -> Vec<RatFunc> {
    let inner = bessel_inner(kmax);
    let mut out = vec![RatFunc::from_poly(Poly::one(NU))];
    for k in 1..=kmax {
        let mut acc = RatFunc::from_poly(Poly::zero(NU));
        for j in 0..k {
            // inner[m-1] = (-1)^m / (m! (ν+1)_m), so the term is -inner * h_j.
            acc = &acc - &(&inner[k - j - 1] * &out[j]);
        }
        out.push(acc);
    }
    out
}

/// `h_0, ..., h_kmax` at a complex order, by the recurrence in double precision.
pub fn bessel_h_complex(nu: Complex64, kmax: usize) -> Result<Vec<Complex64>> {
    let mut inner = Vec::with_capacity(kmax);
    let mut den = Complex64::new(1.0, 0.0);
    for i in 1..=kmax {
        let f = nu + i as f64;
        if f.norm() <= crate::algebra::ratfunc::POLE_TOLERANCE * (1.0 + nu.norm()) {
            return Err(Error::Pole);
        }
        den *= f * i as f64;
        let s = if i % 2 == 0 { 1.0 } else { -1.0 };
        inner.push(Complex64::new(s, 0.0) / den);
    }
    let mut out = vec![Complex64::new(1.0, 0.0)];
    for k in 1..=kmax {
        let acc = (0..k).fold(Complex64::new(0.0, 0.0), |acc, j| acc - inner[k - j - 1] * out[j]);
        out.push(acc);
    }
    Ok(out)
}

/// `h_0, ..., h_kmax` at a rational order, exactly.
pub fn bessel_h_rational(nu: &Rational, kmax: usize) -> Result<Vec<Rational>> {
    let fact = factorials(kmax);
    let mut inner = Vec::with_capacity(kmax);
    let mut poch = Rational::one();
    for (i, f) in fact.iter().enumerate().skip(1) {
        poch *= nu + Rational::from_integer(BigInt::from(i));
        if Zero::is_zero(&poch) {
            return Err(Error::Pole);
        }
        inner.push(sign_pow(i) / (&poch * Rational::from_integer(f.clone())));
    }
    let mut out = vec![Rational::one()];
    for k in 1..=kmax {
        let mut acc = Rational::zero();
        for j in 0..k {
            acc -= &inner[k - j - 1] * &out[j];
        }
        out.push(acc);
    }
    Ok(out)
}

fn zero_pair(ratio: Complex64) -> (Complex64, Complex64) {
    let z = ratio.sqrt() * 2.0;
    (z, -z)
}

/// `±2 sqrt(h_k(ν) / h_{k+1}(ν))`, principal branch first.
pub fn bessel_zero_estimate(nu: Complex64, k: usize) -> Result<(Complex64, Complex64)> {
    let h = bessel_h_complex(nu, k + 1)?;
    if h[k + 1].norm() == 0.0 {
        return Err(Error::Pole);
    }
    Ok(zero_pair(h[k] / h[k + 1]))
}

/// [`bessel_zero_estimate`] with the ratio formed exactly before the square root.
pub fn bessel_zero_estimate_exact(nu: &Rational, k: usize) -> Result<(Complex64, Complex64)> {
    let h = bessel_h_rational(nu, k + 1)?;
    if Zero::is_zero(&h[k + 1]) {
        return Err(Error::Pole);
    }
    Ok(zero_pair(Complex64::new(to_f64(&(&h[k] / &h[k + 1])), 0.0)))
}

/// Slowly converging series over the reciprocal logarithm numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlowSeries {
    /// `γ = Σ_{k>=1} |A_k| / k`.
    EulerGamma,
    /// `ln 2 = Σ_{k>=0} (-1)^k A_k / (k+1)`.
    Ln2,
}

/// Partial sum through `k = n`, exact until the final conversion.
pub fn slow_series_partial(which: SlowSeries, n: usize) -> f64 {
    let a = Family::ReciprocalLog.recurrence_table(n);
    let mut acc = Rational::zero();
    match which {
        SlowSeries::EulerGamma => {
            for (k, ak) in a.iter().enumerate().skip(1) {
                acc -= sign_pow(k) * ak / Rational::from_integer(BigInt::from(k));
            }
        }
        SlowSeries::Ln2 => {
            for (k, ak) in a.iter().enumerate() {
                acc += sign_pow(k) * ak / Rational::from_integer(BigInt::from(k + 1));
            }
        }
    }
    to_f64(&acc)
}

/// Where the Bessel coefficients are evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum BesselPoint {
    Symbolic,
    Rational(Rational),
    Complex(Complex64),
}

/// A family together with its parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceFamily {
    Cosecant,
    Secant,
    ReciprocalLog,
    GeneralizedCosecant(RingValue),
    GeneralizedSecant(RingValue),
    GeneralizedReciprocalLog(RingValue),
    BesselH(BesselPoint),
}

impl SequenceFamily {
    /// Coefficients for `k = 0..=kmax`.
    pub fn table(&self, kmax: usize) -> Result<Vec<RingValue>> {
        let wrap = |v: Vec<Rational>| v.into_iter().map(RingValue::Rational).collect();
        let gen = |f: Family, rho: &RingValue| generalized_table(f, rho, kmax, GeneralizedRoute::BaseNumbers);
        Ok(match self {
            SequenceFamily::Cosecant => wrap(Family::Cosecant.table(kmax)),
            SequenceFamily::Secant => wrap(Family::Secant.table(kmax)),
            SequenceFamily::ReciprocalLog => wrap(Family::ReciprocalLog.table(kmax)),
            SequenceFamily::GeneralizedCosecant(rho) => gen(Family::Cosecant, rho)?,
            SequenceFamily::GeneralizedSecant(rho) => gen(Family::Secant, rho)?,
            SequenceFamily::GeneralizedReciprocalLog(rho) => gen(Family::ReciprocalLog, rho)?,
            SequenceFamily::BesselH(BesselPoint::Symbolic) => {
                bessel_h_table(kmax).into_iter().map(RingValue::RatFunc).collect()
            }
            SequenceFamily::BesselH(BesselPoint::Rational(nu)) => wrap(bessel_h_rational(nu, kmax)?),
            SequenceFamily::BesselH(BesselPoint::Complex(nu)) => {
                bessel_h_complex(*nu, kmax)?.into_iter().map(RingValue::Complex).collect()
            }
        })
    }
}
