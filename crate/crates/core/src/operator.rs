//! The partition operator: a weighted sum over the partitions of `k` in a class.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::rational::{factorials, Rational};
use crate::algebra::{pochhammer, Ring, RingValue};
use crate::classes::{enumerate_class, enumerate_class_subtree, PartitionClass};
use crate::error::{Error, Result};
use crate::partitions::{Order, Partition};

/// `Σ weight(p)` over the partitions `p` of `k` in `class`, starting from `zero`.
pub fn apply<R, F>(k: u32, class: &PartitionClass, zero: &R, mut weight: F) -> R
where
    R: Ring,
    F: FnMut(&Partition) -> R,
{
    let mut acc = zero.clone();
    enumerate_class(k, class, Order::Brcp, |p| {
        acc = acc.add_ref(&weight(p));
    });
    acc
}

/// The part of [`apply`] coming from first-level BRCP subtree `q`.
pub fn apply_subtree<R, F>(k: u32, class: &PartitionClass, q: u32, zero: &R, mut weight: F) -> R
where
    R: Ring,
    F: FnMut(&Partition) -> R,
{
    let mut acc = zero.clone();
    enumerate_class_subtree(k, class, q, |p| {
        acc = acc.add_ref(&weight(p));
    });
    acc
}

/// `N! / Π n_i!` for a partition, as an exact integer.
pub fn multinomial(p: &Partition, fact: &[BigInt]) -> BigInt {
    let mut den = BigInt::one();
    for (_, f) in p.iter() {
        den *= &fact[f as usize];
    }
    &fact[p.num_parts() as usize] / den
}

/// `Π n_i!` for a partition.
pub fn multiplicity_factorials(p: &Partition, fact: &[BigInt]) -> BigInt {
    let mut den = BigInt::one();
    for (_, f) in p.iter() {
        den *= &fact[f as usize];
    }
    den
}

/// Prebuilt weight functions; compose them with [`CannedWeight::Product`].
#[derive(Clone, Debug)]
pub enum CannedWeight {
    /// Contributes 1.
    Unit,
    /// `N! / Π n_i!`.
    Multinomial,
    /// `(-1)^N`.
    Phase,
    /// `Π v_i^{n_i} / n_i!`, with `values[i - 1] = v_i`.
    ElementAssign(Vec<RingValue>),
    /// `g_N`, with `values[N - 1] = g_N`; the empty partition contributes 1.
    OuterFactor(Vec<RingValue>),
    /// `(-ρ)_N` when `negate`, else `(ρ)_N`.
    PochhammerTotal {
        rho: RingValue,
        negate: bool,
    },
    /// `Π (-ρ_i)_{n_i} / n_i!`, with `rhos[i - 1] = ρ_i`.
    PerElementPochhammer(Vec<RingValue>),
    Product(Vec<CannedWeight>),
}

impl CannedWeight {
    fn ring_values(&self, out: &mut Vec<RingValue>) {
        match self {
            CannedWeight::Unit | CannedWeight::Multinomial | CannedWeight::Phase => {}
            CannedWeight::ElementAssign(v) | CannedWeight::OuterFactor(v) | CannedWeight::PerElementPochhammer(v) => {
                out.extend(v.iter().cloned())
            }
            CannedWeight::PochhammerTotal { rho, .. } => out.push(rho.clone()),
            CannedWeight::Product(ws) => ws.iter().for_each(|w| w.ring_values(out)),
        }
    }

    fn check_lengths(&self, k: u32) -> Result<()> {
        let need = k as usize;
        match self {
            CannedWeight::ElementAssign(v) if v.len() < need => {
                Err(Error::InvalidArgument(format!("element values given for i <= {}, need {need}", v.len())))
            }
            CannedWeight::OuterFactor(v) if v.len() < need => {
                Err(Error::InvalidArgument(format!("outer factors given for N <= {}, need {need}", v.len())))
            }
            CannedWeight::PerElementPochhammer(v) if v.len() < need => {
                Err(Error::InvalidArgument(format!("exponents given for i <= {}, need {need}", v.len())))
            }
            CannedWeight::Product(ws) => ws.iter().try_for_each(|w| w.check_lengths(k)),
            _ => Ok(()),
        }
    }

    /// Validate the weight for order `k` and return the ring zero it sums in.
    ///
    /// Weights without ring values sum in the rationals.
    pub fn prepare(&self, k: u32) -> Result<RingValue> {
        self.check_lengths(k)?;
        let mut vals = Vec::new();
        self.ring_values(&mut vals);
        let Some(first) = vals.first() else {
            return Ok(RingValue::Rational(Rational::from_integer(BigInt::from(0))));
        };
        for v in &vals[1..] {
            first.check_compatible(v)?;
        }
        // Pick a non-constant representative so variable names survive.
        let rep = vals.iter().find(|v| v.constant_value().is_none()).unwrap_or(first);
        Ok(rep.zero_like())
    }

    /// Weight of one partition: an integer scale and an optional ring factor.
    fn eval(&self, p: &Partition, fact: &[BigInt], scale: &mut Rational, ring: &mut Option<RingValue>) {
        let mul_ring = |ring: &mut Option<RingValue>, v: RingValue| {
            *ring = Some(match ring.take() {
                None => v,
                Some(r) => r.mul_ref(&v),
            });
        };
        match self {
            CannedWeight::Unit => {}
            CannedWeight::Multinomial => *scale *= Rational::from_integer(multinomial(p, fact)),
            CannedWeight::Phase => {
                if p.num_parts() % 2 == 1 {
                    *scale = -scale.clone();
                }
            }
            CannedWeight::ElementAssign(v) => {
                for (e, f) in p.iter() {
                    mul_ring(ring, v[e as usize - 1].pow(f));
                }
                *scale /= Rational::from_integer(multiplicity_factorials(p, fact));
            }
            CannedWeight::OuterFactor(v) => {
                let n = p.num_parts() as usize;
                if n > 0 {
                    mul_ring(ring, v[n - 1].clone());
                }
            }
            CannedWeight::PochhammerTotal { rho, negate } => {
                let x = if *negate { rho.neg_ref() } else { rho.clone() };
                mul_ring(ring, pochhammer(&x, p.num_parts()));
            }
            CannedWeight::PerElementPochhammer(rhos) => {
                for (e, f) in p.iter() {
                    mul_ring(ring, pochhammer(&rhos[e as usize - 1].neg_ref(), f));
                }
                *scale /= Rational::from_integer(multiplicity_factorials(p, fact));
            }
            CannedWeight::Product(ws) => {
                for w in ws {
                    w.eval(p, fact, scale, ring);
                }
            }
        }
    }

    /// The weight of a single partition in the ring of `zero`.
    pub fn weigh(&self, p: &Partition, fact: &[BigInt], zero: &RingValue) -> RingValue {
        let mut scale = Rational::one();
        let mut ring = None;
        self.eval(p, fact, &mut scale, &mut ring);
        match ring {
            None => zero.rational_like(&scale),
            Some(r) => {
                if scale.is_one() {
                    r
                } else if (-scale.clone()).is_one() {
                    r.neg_ref()
                } else {
                    r.scale(&scale)
                }
            }
        }
    }
}

/// [`apply`] with a canned weight; validates lengths and ring tags first.
pub fn apply_canned(k: u32, class: &PartitionClass, weight: &CannedWeight) -> Result<RingValue> {
    let zero = weight.prepare(k)?;
    let fact = factorials(k as usize);
    Ok(apply(k, class, &zero, |p| weight.weigh(p, &fact, &zero)))
}

/// Stirling numbers of the first kind `S_k^{(j)}` (signed), by
/// `S_{k+1}^{(j)} = S_k^{(j-1)} - k S_k^{(j)}`.
pub fn stirling_first(k: u32, j: u32) -> BigInt {
    stirling_first_row(k)[j as usize].clone()
}

/// `S_k^{(0)}, ..., S_k^{(k)}`.
pub fn stirling_first_row(k: u32) -> Vec<BigInt> {
    let mut row = alloc::vec![BigInt::one()];
    for n in 0..k {
        let mut next = alloc::vec![BigInt::from(0); row.len() + 1];
        for (j, s) in row.iter().enumerate() {
            next[j + 1] += s;
            next[j] -= s * BigInt::from(n);
        }
        row = next;
    }
    row
}

/// `|S_k^{(j)}|`, handy for sign checks.
pub fn stirling_first_unsigned(k: u32, j: u32) -> BigInt {
    stirling_first(k, j).abs()
}
