//! Sparse multivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{forward_owned, render_terms, Poly, Symbol};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A polynomial in an ordered list of variables, stored as exponent tuple -> coefficient.
///
/// Terms with zero coefficient are never stored. The map key order is lexicographic
/// in the exponent tuple; [`MultiPoly::render`] sorts by total degree first.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<Symbol>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.is_constant() && other.is_constant() && self.constant_term() == other.constant_term()
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(vars: &[Symbol]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[Symbol], c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &[Symbol]) -> Self {
        MultiPoly::constant(vars, Rational::one())
    }

    /// The single variable `name`; panics if it is not among `vars`.
    pub fn var(vars: &[Symbol], name: Symbol) -> Self {
        let idx = vars.iter().position(|v| *v == name).expect("variable not in list");
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(vars: &[Symbol], terms: I) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent tuple length");
            p.add_term(e, c);
        }
        p
    }

    /// Embed a univariate polynomial whose variable is one of `vars`.
    pub fn from_poly(vars: &[Symbol], p: &Poly) -> Result<Self> {
        if p.is_constant() {
            return Ok(MultiPoly::constant(vars, p.coeff(0)));
        }
        let idx = vars
            .iter()
            .position(|v| *v == p.var())
            .ok_or_else(|| Error::VariableMismatch { left: p.var().0.into(), right: "multivariate list".into() })?;
        let mut out = MultiPoly::zero(vars);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[idx] = i as u32;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[Symbol] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial with exponent tuple `e`.
    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn index_of(&self, name: Symbol) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown variable {name}")))
    }

    pub fn degree_in(&self, name: Symbol) -> Result<Option<u32>> {
        let i = self.index_of(name)?;
        Ok(self.terms.keys().map(|e| e[i]).max())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.vars);
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

    /// Replace variable `name` by the rational `value`; the variable list is unchanged.
    pub fn substitute(&self, name: Symbol, value: &Rational) -> Result<Self> {
        let i = self.index_of(name)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] = 0;
            let mut f = c.clone();
            for _ in 0..k {
                f *= value;
            }
            out.add_term(e2, f);
        }
        Ok(out)
    }

    /// Replace variable `name` by the polynomial `image` (same variable list).
    pub fn substitute_poly(&self, name: Symbol, image: &MultiPoly) -> Result<Self> {
        let i = self.index_of(name)?;
        self.check_compatible(image)?;
        let mut out = MultiPoly::zero(&self.vars);
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(&self.vars)];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = &powers[powers.len() - 1] * image;
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[i] = 0;
            let mono = MultiPoly::from_terms(&self.vars, [(e2, c.clone())]);
            out = &out + &(&mono * &powers[k]);
        }
        Ok(out)
    }

    /// Substitute every variable at once, `self(images[0], images[1], ...)`.
    ///
    /// The images must share one variable list, which becomes the result's.
    pub fn eval_multi(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = images.iter().find(|m| !m.is_constant()).map_or_else(|| self.vars.clone(), |m| m.vars.clone());
        for m in images {
            if !m.is_constant() && m.vars != target {
                return Err(Error::VariableMismatch {
                    left: alloc::format!("{target:?}"),
                    right: alloc::format!("{:?}", m.vars),
                });
            }
        }
        let images: Vec<MultiPoly> = images.iter().map(|m| m.rebased(&target)).collect();
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|m| vec![MultiPoly::one(&target), m.clone()]).collect();
        let mut out = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                if k > 0 {
                    term = &term * &pw[k as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `p(image)` for a univariate `p`, computed by Horner's rule.
    pub fn compose(p: &Poly, image: &MultiPoly) -> MultiPoly {
        let vars = image.vars.clone();
        let mut acc = MultiPoly::zero(&vars);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * image) + &MultiPoly::constant(&vars, c.clone());
        }
        acc
    }

    /// Collapse to a univariate polynomial in `name` when no other variable occurs.
    pub fn to_poly(&self, name: Symbol) -> Result<Poly> {
        let i = self.index_of(name)?;
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != i && x != 0) {
                return Err(Error::InvalidArgument("polynomial is not univariate".into()));
            }
            let d = e[i] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] += c;
        }
        Ok(Poly::new(name, coeffs))
    }

    /// Coefficient of `name^k` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, name: Symbol, k: u32) -> Result<MultiPoly> {
        let i = self.index_of(name)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut e2 = e.clone();
                e2[i] = 0;
                out.add_term(e2, c.clone());
            }
        }
        Ok(out)
    }

    /// Swap the roles of two variables.
    pub fn swap_vars(&self, a: Symbol, b: Symbol) -> Result<Self> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i, j);
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    pub fn check_compatible(&self, other: &MultiPoly) -> Result<()> {
        if self.vars == other.vars || self.is_constant() || other.is_constant() {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: alloc::format!("{:?}", self.vars),
                right: alloc::format!("{:?}", other.vars),
            })
        }
    }

    fn pick_vars(&self, other: &MultiPoly) -> Vec<Symbol> {
        if self.vars == other.vars || other.is_constant() {
            self.vars.clone()
        } else {
            other.vars.clone()
        }
    }

    fn rebased(&self, vars: &[Symbol]) -> MultiPoly {
        if self.vars == vars {
            return self.clone();
        }
        MultiPoly::constant(vars, self.constant_term())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    /// Canonical text: terms ascending by total degree, ties by exponent tuple.
    pub fn render(&self) -> String {
        let mut terms: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        render_terms(terms.into_iter().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(x, _)| **x > 0)
                .map(|(x, v)| if *x == 1 { String::from(v.0) } else { alloc::format!("{}^{}", v.0, x) })
                .collect();
            (c.clone(), mono.join("*"))
        }))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(self.check_compatible(rhs).is_ok(), "adding polynomials over different variables");
        let vars = self.pick_vars(rhs);
        let mut out = self.rebased(&vars);
        for (e, c) in &rhs.rebased(&vars).terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(self.check_compatible(rhs).is_ok(), "multiplying polynomials over different variables");
        let vars = self.pick_vars(rhs);
        let a = self.rebased(&vars);
        let b = rhs.rebased(&vars);
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms: acc }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

forward_owned!(MultiPoly, Add, add);
forward_owned!(MultiPoly, Sub, sub);
forward_owned!(MultiPoly, Mul, mul);
