//! Power series coefficients of `g(a f(y))` by the partition method.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::rational::{factorials, Rational};
use crate::algebra::{pochhammer, Ring};
use crate::classes::PartitionClass;
use crate::error::{Error, Result};
use crate::operator::{apply, multiplicity_factorials};
use crate::partitions::Partition;

/// The outer function of the composition.
#[derive(Clone, Debug, PartialEq)]
pub enum Outer<R> {
    /// `g(x) = Σ q_N x^N`; the inner series has no constant term.
    Q { q: Vec<R>, a: R },
    /// Derivatives `F^(N)(a p_0)` for `N = 0..=kmax`, for an inner series with `p_0 != 0`.
    F { derivs: Vec<R>, a: R },
}

/// Inputs of the expansion: inner coefficients `p_1..p_kmax` and the outer data.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSpec<R> {
    inner: Vec<R>,
    outer: Outer<R>,
    kmax: usize,
}

impl<R: Ring> SeriesSpec<R> {
    /// `inner[i - 1] = p_i` for `i = 1..=kmax`; the outer table must cover `0..=kmax`.
    pub fn new(inner: Vec<R>, outer: Outer<R>, kmax: usize) -> Result<Self> {
        if inner.len() < kmax {
            return Err(Error::InvalidArgument(format!(
                "inner coefficients p_1..p_{} given, need p_{kmax}",
                inner.len()
            )));
        }
        let outer_len = match &outer {
            Outer::Q { q, .. } => q.len(),
            Outer::F { derivs, .. } => derivs.len(),
        };
        if outer_len < kmax + 1 {
            return Err(Error::InvalidArgument(format!("outer table has {outer_len} entries, need {}", kmax + 1)));
        }
        Ok(SeriesSpec { inner, outer, kmax })
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn inner(&self) -> &[R] {
        &self.inner
    }

    pub fn outer(&self) -> &Outer<R> {
        &self.outer
    }

    /// `g_N`, the factor multiplying `Π p_i^{n_i}/n_i!` for a partition with `N` parts.
    fn outer_factors(&self) -> Vec<R> {
        let fact = factorials(self.kmax);
        let mut out = Vec::with_capacity(self.kmax + 1);
        match &self.outer {
            Outer::Q { q, a } => {
                let mut apow = a.one_like();
                for (n, f) in fact.iter().enumerate() {
                    out.push(q[n].mul_ref(&apow).scale(&Rational::from_integer(f.clone())));
                    apow = apow.mul_ref(a);
                }
            }
            Outer::F { derivs, a } => {
                let mut apow = a.one_like();
                for d in derivs.iter().take(self.kmax + 1) {
                    out.push(d.mul_ref(&apow));
                    apow = apow.mul_ref(a);
                }
            }
        }
        out
    }

    /// `D_0`.
    pub fn constant_term(&self) -> R {
        match &self.outer {
            Outer::Q { q, .. } => q[0].clone(),
            Outer::F { derivs, .. } => derivs[0].clone(),
        }
    }
}

/// `Π v_i^{n_i} / n_i!` for a partition, with `values[i - 1] = v_i`.
pub fn element_product<R: Ring>(p: &Partition, values: &[R], fact: &[BigInt], one: &R) -> R {
    let mut acc = one.clone();
    for (e, f) in p.iter() {
        acc = acc.mul_ref(&values[e as usize - 1].pow(f));
    }
    let den = multiplicity_factorials(p, fact);
    acc.scale(&Rational::new(BigInt::from(1), den))
}

/// The per-partition weight of [`expand`], with its tables precomputed.
pub struct Weigher<'a, R> {
    inner: &'a [R],
    g: Vec<R>,
    fact: Vec<BigInt>,
    one: R,
}

impl<R: Ring> Weigher<'_, R> {
    /// `g_N Π p_i^{n_i} / n_i!` for a partition of order at most `kmax`.
    pub fn weigh(&self, p: &Partition) -> R {
        self.g[p.num_parts() as usize].mul_ref(&element_product(p, self.inner, &self.fact, &self.one))
    }
}

impl<R: Ring> SeriesSpec<R> {
    pub fn weigher(&self) -> Weigher<'_, R> {
        Weigher {
            inner: &self.inner,
            g: self.outer_factors(),
            fact: factorials(self.kmax),
            one: self.constant_term().one_like(),
        }
    }
}

/// `D_0, ..., D_kmax`.
pub fn expand<R: Ring>(spec: &SeriesSpec<R>) -> Vec<R> {
    let d0 = spec.constant_term();
    let zero = d0.zero_like();
    let w = spec.weigher();
    let all = PartitionClass::all();
    let mut out = Vec::with_capacity(spec.kmax + 1);
    out.push(d0);
    for k in 1..=spec.kmax as u32 {
        out.push(apply(k, &all, &zero, |p| w.weigh(p)));
    }
    out
}

/// Coefficients `E_k` with `1 / Σ D_k y^k = (1/D_0) Σ E_k y^k`; `E_0 = 1`.
pub fn invert<R: Ring>(d: &[R]) -> Result<Vec<R>> {
    let d0 = d.first().ok_or_else(|| Error::InvalidArgument("empty coefficient table".into()))?;
    if d0.is_zero() {
        return Err(Error::NotInvertible("D_0"));
    }
    let inv = d0.try_inverse()?;
    let kmax = d.len() - 1;
    let fact = factorials(kmax);
    let one = d0.one_like();
    let zero = d0.zero_like();
    // (-1)^N N! D_0^{-N}
    let mut g = Vec::with_capacity(kmax + 1);
    let mut ipow = one.clone();
    for (n, f) in fact.iter().enumerate() {
        let s = if n % 2 == 0 { f.clone() } else { -f.clone() };
        g.push(ipow.scale(&Rational::from_integer(s)));
        ipow = ipow.mul_ref(&inv);
    }
    let all = PartitionClass::all();
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(one.clone());
    for k in 1..=kmax as u32 {
        out.push(apply(k, &all, &zero, |p| {
            g[p.num_parts() as usize].mul_ref(&element_product(p, &d[1..], &fact, &one))
        }));
    }
    Ok(out)
}

/// Coefficients of `(Σ D_k y^k)^ρ` for a table with `D_0 = 1`.
pub fn expand_power<R: Ring>(d: &[R], rho: &R) -> Result<Vec<R>> {
    let d0 = d.first().ok_or_else(|| Error::InvalidArgument("empty coefficient table".into()))?;
    let one = rho.one_like();
    if *d0 != one {
        return Err(Error::InvalidArgument("expand_power needs D_0 = 1".into()));
    }
    let kmax = d.len() - 1;
    let fact = factorials(kmax);
    let zero = rho.zero_like();
    let minus_rho = rho.neg_ref();
    // (-1)^N (-ρ)_N
    let g: Vec<R> = (0..=kmax as u32)
        .map(|n| {
            let p = pochhammer(&minus_rho, n);
            if n % 2 == 0 {
                p
            } else {
                p.neg_ref()
            }
        })
        .collect();
    let all = PartitionClass::all();
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(one.clone());
    for k in 1..=kmax as u32 {
        out.push(apply(k, &all, &zero, |p| {
            let n = p.num_parts() as usize;
            if g[n].is_zero() {
                return zero.clone();
            }
            g[n].mul_ref(&element_product(p, &d[1..], &fact, &one))
        }));
    }
    Ok(out)
}

/// `Σ_{j=0}^{k} D_j E_{k-j} = 0` for `1 <= k <= kmax`.
pub fn check_cauchy_inverse<R: Ring>(d: &[R], e: &[R]) -> bool {
    if d.len() != e.len() || d.is_empty() {
        return false;
    }
    (1..d.len()).all(|k| {
        let mut acc = d[0].zero_like();
        for j in 0..=k {
            acc = acc.add_ref(&d[j].mul_ref(&e[k - j]));
        }
        acc.is_zero()
    })
}

/// `r^(k)(0) = k! D_k`.
pub fn derivatives_at_zero<R: Ring>(d: &[R]) -> Vec<R> {
    let fact = factorials(d.len().saturating_sub(1));
    d.iter().zip(fact).map(|(x, f)| x.scale(&Rational::from_integer(f))).collect()
}

/// Cauchy product of two coefficient tables, truncated to the shorter length.
pub fn convolve<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut acc = a[0].zero_like();
            for j in 0..=k {
                acc = acc.add_ref(&a[j].mul_ref(&b[k - j]));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use alloc::vec;

    fn sine_inner(kmax: usize) -> Vec<Rational> {
        let fact = factorials(2 * kmax + 1);
        (1..=kmax)
            .map(|i| {
                let s = if i % 2 == 1 { 1 } else { -1 };
                Rational::new(BigInt::from(s), fact[2 * i + 1].clone())
            })
            .collect()
    }

    #[test]
    fn cosecant_start() {
        let spec = SeriesSpec::new(sine_inner(3), Outer::Q { q: vec![int(1); 4], a: int(1) }, 3).unwrap();
        let d = expand(&spec);
        assert_eq!(d[0], int(1));
        assert_eq!(d[1], rat(1, 6));
        assert_eq!(d[2], rat(7, 360));
        let e = invert(&d).unwrap();
        assert_eq!(e[1], rat(-1, 6));
        assert_eq!(e[2], rat(1, 120));
        assert!(check_cauchy_inverse(&d, &e));
    }

    #[test]
    fn power_two_is_square() {
        let d = vec![int(1), rat(1, 2), rat(-1, 3), int(2), rat(5, 7)];
        assert_eq!(expand_power(&d, &int(2)).unwrap(), convolve(&d, &d));
        assert_eq!(expand_power(&d, &int(1)).unwrap(), d);
    }

    #[test]
    fn zero_inner_series() {
        let spec = SeriesSpec::new(vec![int(0); 4], Outer::Q { q: vec![int(3); 5], a: int(2) }, 4).unwrap();
        assert_eq!(expand(&spec), vec![int(3), int(0), int(0), int(0), int(0)]);
    }

    #[test]
    fn short_tables_rejected() {
        assert!(SeriesSpec::new(vec![int(1)], Outer::Q { q: vec![int(1); 3], a: int(1) }, 2).is_err());
        assert!(invert::<Rational>(&[int(0), int(1)]).is_err());
        assert!(expand_power(&[int(2), int(1)], &int(3)).is_err());
    }
}
