//! Generating functions built from partition sums: the partition function and
//! its discrete counterpart, divisor sums, products `Π (1 + C_i z^i)^{ρ_i}`,
//! and the multi-parameter families `QP_k` and `HP_k`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::rational::{factorials, is_integer, sign_pow, Rational};
use crate::algebra::{pochhammer, MultiPoly, Poly, Ring, Symbol};
use crate::classes::{pentagonal_index, ElementFilter, PartitionClass};
use crate::error::{Error, Result};
use crate::operator::{apply, multinomial, multiplicity_factorials};
use crate::partitions::{count_partitions, partition_numbers, Partition};

pub const OMEGA: Symbol = Symbol("w");
pub const RHO: Symbol = Symbol("rho");
pub const ALPHA: Symbol = Symbol("a");
pub const BETA: Symbol = Symbol("b");
pub const X: Symbol = Symbol("x");
pub const Y: Symbol = Symbol("y");

/// Variables of [`qp_poly`], in order.
pub const QP_VARS: [Symbol; 3] = [OMEGA, BETA, ALPHA];
/// Variables of [`hp_poly`], in order.
pub const HP_VARS: [Symbol; 3] = [OMEGA, X, Y];
/// Variables of [`q_rho`], in order.
pub const Q_RHO_VARS: [Symbol; 2] = [OMEGA, RHO];

fn ri(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Sorted divisors of `j >= 1`.
pub fn divisors(j: u32) -> Vec<u32> {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let mut d = 1;
    while d * d <= j {
        if j % d == 0 {
            lo.push(d);
            if d * d != j {
                hi.push(j / d);
            }
        }
        d += 1;
    }
    lo.extend(hi.into_iter().rev());
    lo
}

/// Divisor sums attached to `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisorData {
    pub j: u32,
    pub divisors: Vec<u32>,
    /// `γ_j = Σ_{d|j} d/j`.
    pub gamma: Rational,
    /// `γ_j(ω) = Σ_{d|j} (d/j) ω^{j/d}`.
    pub gamma_poly: Poly,
}

impl DivisorData {
    pub fn new(j: u32) -> Self {
        assert!(j >= 1, "divisor data needs j >= 1");
        let divisors = divisors(j);
        let mut gamma = Rational::zero();
        let mut coeffs = vec![Rational::zero(); j as usize + 1];
        for &d in &divisors {
            let c = Rational::new(d.into(), j.into());
            gamma += &c;
            coeffs[(j / d) as usize] += c;
        }
        DivisorData { j, divisors, gamma, gamma_poly: Poly::new(OMEGA, coeffs) }
    }
}

/// `γ_1, ..., γ_kmax`.
pub fn gammas(kmax: u32) -> Vec<Rational> {
    (1..=kmax).map(|j| DivisorData::new(j).gamma).collect()
}

/// `q(k)`, the coefficient of `z^k` in `Π (1 - z^i)`: `(-1)^j` at `k = (3j^2 ± j)/2`, else 0.
pub fn q_number(k: u32) -> i32 {
    if k == 0 {
        return 1;
    }
    match pentagonal_index(k) {
        Some(j) if j % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    }
}

/// Ways of computing `q(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QRoute {
    ClosedForm,
    /// Operator over `p(i)` with outer `(-1)^N N!`.
    PartitionNumbers,
    /// Operator over `γ_i` with outer `(-1)^N`.
    Gamma,
    /// Discrete-partition sum of `(-1)^N`.
    Discrete,
}

/// `q(k)` by the chosen route.
pub fn q_number_via(k: u32, route: QRoute) -> Rational {
    let all = PartitionClass::all();
    let fact = factorials(k as usize);
    let zero = Rational::zero();
    match route {
        QRoute::ClosedForm => ri(q_number(k)),
        QRoute::PartitionNumbers => {
            let p: Vec<Rational> = partition_numbers(k as usize).into_iter().map(Rational::from_integer).collect();
            apply(k, &all, &zero, |part| {
                let mut w = sign_pow(part.num_parts() as usize) * ri(multinomial(part, &fact));
                for (e, f) in part.iter() {
                    w *= Ring::pow(&p[e as usize], f);
                }
                w
            })
        }
        QRoute::Gamma => {
            let g = gammas(k);
            apply(k, &all, &zero, |part| sign_pow(part.num_parts() as usize) * element_product(part, &g, &fact))
        }
        QRoute::Discrete => apply(k, &PartitionClass::distinct(), &zero, |part| sign_pow(part.num_parts() as usize)),
    }
}

fn element_product(p: &Partition, values: &[Rational], fact: &[BigInt]) -> Rational {
    let mut acc = Rational::one();
    for (e, f) in p.iter() {
        acc *= Ring::pow(&values[e as usize - 1], f);
    }
    acc / ri(multiplicity_factorials(p, fact))
}

/// `p(k)` over partitions into pentagonal elements: `Σ (-1)^N N! Π q(i)^{n_i}/n_i!`.
pub fn p_from_q(k: u32) -> BigInt {
    let class = PartitionClass::only(ElementFilter::Pentagonal);
    let fact = factorials(k as usize);
    let mut acc = BigInt::zero();
    crate::classes::enumerate_class(k, &class, crate::partitions::Order::Brcp, |p| {
        let negative = p.iter().filter(|&(e, f)| q_number(e) < 0 && f % 2 == 1).count() % 2 == 1;
        let m = multinomial(p, &fact);
        if negative ^ (p.num_parts() % 2 == 1) {
            acc -= m;
        } else {
            acc += m;
        }
    });
    acc
}

/// `p(k) = Σ_{partitions} Π γ_i^{n_i}/n_i!`; errors if the sum is not an integer.
pub fn p_from_gamma(k: u32) -> Result<BigInt> {
    let g = gammas(k);
    let fact = factorials(k as usize);
    let v = apply(k, &PartitionClass::all(), &Rational::zero(), |p| element_product(p, &g, &fact));
    if !is_integer(&v) {
        return Err(Error::Inconsistent(alloc::format!("divisor-sum route gave non-integer p({k}) = {v}")));
    }
    Ok(v.to_integer())
}

fn omega_power(n: u32) -> Poly {
    Poly::monomial(OMEGA, Rational::one(), n as usize)
}

/// `q(k, ω) = Σ_{discrete partitions} ω^N`.
pub fn q_poly(k: u32) -> Poly {
    apply(k, &PartitionClass::distinct(), &Poly::zero(OMEGA), |p| omega_power(p.num_parts()))
}

/// `p(k, ω) = Σ_{partitions} ω^N`.
pub fn p_poly(k: u32) -> Poly {
    apply(k, &PartitionClass::all(), &Poly::zero(OMEGA), |p| omega_power(p.num_parts()))
}

/// `p(cω)`: substitute a multiple of the variable.
pub fn dilate(p: &Poly, c: &Rational) -> Poly {
    let mut pw = Rational::one();
    let coeffs = p
        .coeffs()
        .iter()
        .map(|a| {
            let out = a * &pw;
            pw *= c;
            out
        })
        .collect();
    Poly::new(p.var(), coeffs)
}

/// Per-index data of `Π_i (1 + C_i z^i)^{ρ_i}`; `c[i - 1] = C_i`, `rho[i - 1] = ρ_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductSpec<R> {
    pub c: Vec<R>,
    pub rho: Vec<R>,
}

impl<R: Ring> ProductSpec<R> {
    pub fn new(c: Vec<R>, rho: Vec<R>) -> Result<Self> {
        if c.len() != rho.len() {
            return Err(Error::InvalidArgument(alloc::format!("{} coefficients but {} exponents", c.len(), rho.len())));
        }
        Ok(ProductSpec { c, rho })
    }

    /// The same `C` and `ρ` for every index up to `kmax`.
    pub fn uniform(c: R, rho: R, kmax: usize) -> Self {
        ProductSpec { c: vec![c; kmax], rho: vec![rho; kmax] }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }
}

/// `B_0, ..., B_kmax` with `B_k = Σ (-1)^N Π (-ρ_i)_{n_i}/n_i! C_i^{n_i}`.
pub fn product_coefficients<R: Ring>(spec: &ProductSpec<R>, kmax: usize) -> Result<Vec<R>> {
    if spec.len() < kmax {
        return Err(Error::InvalidArgument(alloc::format!("product data given for i <= {}, need {kmax}", spec.len())));
    }
    let Some(first) = spec.c.first() else {
        return Err(Error::InvalidArgument("empty product".into()));
    };
    let fact = factorials(kmax);
    let zero = first.zero_like();
    let one = first.one_like();
    let neg_rho: Vec<R> = spec.rho.iter().map(|r| r.neg_ref()).collect();
    let mut out = vec![one.clone()];
    for k in 1..=kmax as u32 {
        out.push(apply(k, &PartitionClass::all(), &zero, |p| {
            let mut w = one.clone();
            for (e, f) in p.iter() {
                let i = e as usize - 1;
                let poch = pochhammer(&neg_rho[i], f);
                if poch.is_zero() {
                    return zero.clone();
                }
                w = w.mul_ref(&poch).mul_ref(&spec.c[i].pow(f));
            }
            let s = sign_pow(p.num_parts() as usize) / ri(multiplicity_factorials(p, &fact));
            w.scale(&s)
        }));
    }
    Ok(out)
}

/// Discrete-partition form for unit exponents: `h_k = Σ_{discrete partitions} Π C_i`.
pub fn discrete_product_coefficients<R: Ring>(c: &[R], kmax: usize) -> Vec<R> {
    let one = c[0].one_like();
    let zero = c[0].zero_like();
    let mut out = vec![one.clone()];
    for k in 1..=kmax as u32 {
        out.push(apply(k, &PartitionClass::distinct(), &zero, |p| {
            p.iter().fold(one.clone(), |acc, (e, _)| acc.mul_ref(&c[e as usize - 1]))
        }));
    }
    out
}

/// `C_1, ..., C_kmax` with `Π (1 + C_i y^i) = e^y`.
pub fn exp_product_c(kmax: usize) -> Vec<Rational> {
    let mut c: Vec<Rational> = Vec::with_capacity(kmax);
    for i in 1..=kmax as u32 {
        if i == 1 {
            c.push(Rational::one());
            continue;
        }
        let mut acc = Rational::zero();
        for d in divisors(i).into_iter().skip(1) {
            let term = Ring::pow(&c[(i / d) as usize - 1], d) / ri(d);
            if d % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        c.push(acc);
    }
    c
}

/// `q(k, ω, ρ)` for `k = 0..=kmax`: coefficients of `Π (1 + ω z^i)^ρ`, as polynomials in `(ω, ρ)`.
pub fn q_rho(kmax: usize) -> Vec<MultiPoly> {
    let w = MultiPoly::var(&Q_RHO_VARS, OMEGA);
    let r = MultiPoly::var(&Q_RHO_VARS, RHO);
    product_coefficients(&ProductSpec::uniform(w, r, kmax.max(1)), kmax).expect("uniform spec")
}

/// `q(k, ω, ρ)` at a fixed rational `ρ`, as a polynomial in `ω`.
pub fn q_rho_at(kmax: usize, rho: &Rational) -> Vec<Poly> {
    q_rho(kmax)
        .into_iter()
        .map(|m| m.substitute(RHO, rho).and_then(|m| m.to_poly(OMEGA)).expect("variables (w, rho)"))
        .collect()
}

/// `QP_k(ω, β, α) = Σ_j q(j, -βω) p(k-j, αω)`.
pub fn qp_poly(k: u32) -> MultiPoly {
    qp_table(k as usize).pop().unwrap()
}

/// `QP_0, ..., QP_kmax`.
pub fn qp_table(kmax: usize) -> Vec<MultiPoly> {
    let w = MultiPoly::var(&QP_VARS, OMEGA);
    let minus_bw = -(&MultiPoly::var(&QP_VARS, BETA) * &w);
    let aw = &MultiPoly::var(&QP_VARS, ALPHA) * &w;
    let q: Vec<MultiPoly> = (0..=kmax as u32).map(|j| MultiPoly::compose(&q_poly(j), &minus_bw)).collect();
    let p: Vec<MultiPoly> = (0..=kmax as u32).map(|j| MultiPoly::compose(&p_poly(j), &aw)).collect();
    crate::series::convolve(&q, &p)
}

/// `HP_0, ..., HP_kmax` with `HP_k(ω, x, y) = Σ_j QP_j(ω, x, 1) QP_{k-j}(ω, y, xy)`.
pub fn hp_table(kmax: usize) -> Vec<MultiPoly> {
    let w = MultiPoly::var(&HP_VARS, OMEGA);
    let x = MultiPoly::var(&HP_VARS, X);
    let y = MultiPoly::var(&HP_VARS, Y);
    let one = MultiPoly::one(&HP_VARS);
    let xy = &x * &y;
    let qp = qp_table(kmax);
    let left: Vec<MultiPoly> =
        qp.iter().map(|m| m.eval_multi(&[w.clone(), x.clone(), one.clone()]).expect("three images")).collect();
    let right: Vec<MultiPoly> =
        qp.iter().map(|m| m.eval_multi(&[w.clone(), y.clone(), xy.clone()]).expect("three images")).collect();
    crate::series::convolve(&left, &right)
}

pub fn hp_poly(k: u32) -> MultiPoly {
    hp_table(k as usize).pop().unwrap()
}

/// `q(0,1), ..., q(kmax,1)`, the numbers of discrete partitions, from the
/// even/odd recurrences that pair `q(j)` with `q(k-j, 1)`.
pub fn discrete_counts(kmax: usize) -> Vec<BigInt> {
    let q = |k: usize| BigInt::from(q_number(k as u32));
    let mut d: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=kmax {
        let m = n / 2;
        let mut acc = BigInt::zero();
        let upper = if n % 2 == 0 { m.saturating_sub(1) } else { m };
        for j in 1..=upper {
            acc += q(j) * &d[n - j] + q(n - j) * &d[j];
        }
        let v = if n % 2 == 0 {
            // q(2m,1) + q(2m) = q(m)(1 - q(m,1)) - Σ_{j=1}^{m-1} (...)
            q(m) * (BigInt::one() - &d[m]) - acc - q(n)
        } else {
            // q(2m+1,1) + q(2m+1) = -Σ_{j=1}^{m} (...)
            -acc - q(n)
        };
        d.push(v);
    }
    d
}

/// `q(k, 1)` by [`discrete_counts`].
pub fn discrete_count_recurrence(k: u32) -> BigInt {
    discrete_counts(k as usize).pop().unwrap()
}

/// Gaussian binomial `[n choose m]_z` as a polynomial in `z` (here `ω`).
pub fn gaussian_binomial(n: u32, m: u32) -> Poly {
    if m > n {
        return Poly::zero(OMEGA);
    }
    // Row recurrence [n, m] = [n-1, m-1] + z^m [n-1, m].
    let mut row: Vec<Poly> = vec![Poly::one(OMEGA)];
    for i in 1..=n {
        let mut next = vec![Poly::one(OMEGA); i as usize + 1];
        for j in 1..i as usize {
            next[j] = &row[j - 1] + &(&omega_power(j as u32) * &row[j]);
        }
        row = next;
    }
    row.swap_remove(m as usize)
}

/// Number of partitions of `k` with at most `m` parts, each at most `n`.
pub fn gaussian_count(k: u32, m: u32, n: u32) -> BigInt {
    gaussian_binomial(m + n, m).coeff(k as usize).to_integer()
}

/// `p(k)` as an exact integer, read from the Euler recurrence.
pub fn p_number(k: u32) -> BigInt {
    count_partitions(k)
}

/// `|q(k)|`-weighted check helper: `q(k)` as `i64`.
pub fn q_number_i64(k: u32) -> i64 {
    q_number(k) as i64
}

/// Triangular index `j` with `k = j(j+1)/2`, if any.
pub fn triangular_index(k: u32) -> Option<u32> {
    let d = 8 * u64::from(k) + 1;
    let s = d.isqrt();
    (s * s == d).then(|| ((s - 1) / 2) as u32)
}

/// Index `i` with `k = i^2`, if any.
pub fn square_index(k: u32) -> Option<u32> {
    let s = u64::from(k).isqrt();
    (s * s == u64::from(k)).then_some(s as u32)
}

/// Value of a rational that should be a small integer.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if is_integer(r) {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Absolute value helper used by the parity tables.
pub fn abs_big(b: &BigInt) -> BigInt {
    b.abs()
}
