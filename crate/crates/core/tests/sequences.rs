use num_bigint::BigInt;
use num_complex::Complex64;
use partmeth_core::algebra::{factorial, int, rat, to_f64, Poly, RatFunc, Rational};
use partmeth_core::classes::{ElementFilter, PartitionClass};
use partmeth_core::operator::apply;
use partmeth_core::sequences::*;

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

fn sgn(n: usize) -> Rational {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// ζ(s) by Euler-Maclaurin after 200 terms.
fn zeta(s: u32) -> f64 {
    let n = 200.0f64;
    let sf = s as f64;
    let mut acc: f64 = (1..200).map(|j| (j as f64).powf(-sf)).sum();
    acc += n.powf(1.0 - sf) / (sf - 1.0) + 0.5 * n.powf(-sf);
    // B2/2!, B4/4!, B6/6! terms
    let b = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0];
    let mut rising = sf;
    let mut pw = n.powf(-sf - 1.0);
    for (i, c) in b.iter().enumerate() {
        acc += c * rising * pw;
        rising *= (sf + 2.0 * i as f64 + 1.0) * (sf + 2.0 * i as f64 + 2.0);
        pw /= n * n;
    }
    acc
}

/// Σ_{j>=1} (-1)^{j+1} / (2j-1)^s, averaging consecutive partial sums.
fn beta(s: u32) -> f64 {
    let mut acc = 0.0;
    let mut prev = 0.0;
    for j in 1..=200_000u64 {
        prev = acc;
        let t = ((2 * j - 1) as f64).powi(-(s as i32));
        acc += if j % 2 == 1 { t } else { -t };
    }
    0.5 * (acc + prev)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn cosecant_matches_zeta() {
    let c = Family::Cosecant.table(10);
    let pi = std::f64::consts::PI;
    for k in 1..=10u32 {
        let lhs = 4f64.powi(k as i32) * to_f64(&c[k as usize]);
        let rhs = 2.0 * (4f64.powi(k as i32) - 2.0) * zeta(2 * k) / pi.powi(2 * k as i32);
        assert!(rel(lhs, rhs) < 1e-12, "k={k} {lhs} {rhs}");
    }
}

#[test]
fn secant_matches_hurwitz_difference() {
    let d = Family::Secant.table(8);
    let pi = std::f64::consts::PI;
    for k in 1..=8u32 {
        let rhs = 4f64.powi(k as i32 + 1) / pi.powi(2 * k as i32 + 1) * beta(2 * k + 1);
        assert!(rel(to_f64(&d[k as usize]), rhs) < 1e-12, "k={k}");
    }
}

#[test]
fn cosecant_bernoulli_relation() {
    // Bernoulli numbers from Σ_{j<=n} C(n+1, j) B_j = 0.
    let n = 16usize;
    let mut b = vec![int(1)];
    for m in 1..=2 * n {
        let mut acc = int(0);
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(partmeth_core::algebra::binomial(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / int(m as i64 + 1));
    }
    let c = Family::Cosecant.table(n);
    for k in 1..=n {
        let four = Rational::from_integer(BigInt::from(4).pow(k as u32));
        assert_eq!(c[k], -sgn(k) * (four - int(2)) * &b[2 * k] / fact(2 * k as u64));
    }
}

#[test]
fn families_to_twenty() {
    for f in Family::ALL {
        assert_eq!(f.table(20), f.recurrence_table(20), "{}", f.name());
    }
    for k in 0..=20u32 {
        assert_eq!(reciprocal_log_stirling(k), reciprocal_log(k as usize));
    }
    let a = Family::ReciprocalLog.table(20);
    for k in 2..20 {
        assert!(a[k].clone() * a[k + 1].clone() < int(0), "k={k}");
    }
    assert_eq!(secant(0), int(1));
    assert_eq!(a[2], rat(-1, 12));
}

#[test]
fn inversions_give_the_base_series() {
    for f in Family::ALL {
        let e = partmeth_core::series::invert(&f.table(12)).unwrap();
        assert_eq!(e, f.reciprocal_series(12), "{}", f.name());
    }
}

fn weighted(k: u32, class: &PartitionClass, v: impl Fn(u32) -> Rational, g: impl Fn(u32) -> Rational) -> Rational {
    apply(k, class, &int(0), |p| {
        let mut w = g(p.num_parts());
        for (e, f) in p.iter() {
            let ve = v(e);
            for _ in 0..f {
                w *= &ve;
            }
            w /= fact(f as u64);
        }
        w
    })
}

#[test]
fn cosecant_polynomial_identity() {
    let all = PartitionClass::all();
    for k in 1..=6u32 {
        let lhs = weighted(2 * k, &all, |i| fact(i as u64 + 1).recip(), |n| -sgn(n as usize) * fact(n as u64));
        let rhs = weighted(k, &all, |i| fact(2 * i as u64 + 1).recip(), |n| sgn(n as usize) * fact(n as u64));
        let four = Rational::from_integer(BigInt::from(4).pow(k));
        assert_eq!(lhs, rhs / (four - int(2)), "k={k}");
    }
}

#[test]
fn secant_log_identity() {
    let d = Family::Secant.table(8);
    let c = Family::Cosecant.table(8);
    let all = PartitionClass::all();
    for k in 1..=8u32 {
        let lhs = weighted(k, &all, |i| d[i as usize].clone(), |n| -sgn(n as usize) * fact(n as u64 - 1));
        let four = Rational::from_integer(BigInt::from(4).pow(k));
        let two = Rational::from_integer(BigInt::from(2).pow(2 * k - 1));
        let rhs = (four - int(1)) / (int(1) - two.recip()) * &c[k as usize] / int(2 * k as i64);
        assert_eq!(lhs, rhs, "k={k}");
    }
}

#[test]
fn even_element_form_of_cosecant() {
    let even = PartitionClass::only(ElementFilter::Even);
    let all = PartitionClass::all();
    for k in 1..=8u32 {
        let g = |n: u32| sgn(n as usize) * fact(n as u64);
        let eep = weighted(2 * k, &even, |e| fact(e as u64 + 1).recip(), g);
        let std = weighted(k, &all, |i| fact(2 * i as u64 + 1).recip(), g);
        assert_eq!(eep, std);
        assert_eq!(std, sgn(k as usize) * cosecant(k as usize));
    }
}

#[test]
fn generalized_routes() {
    for f in Family::ALL {
        let base = generalized(f, 8);
        let inner = generalized_table(f, &Poly::x(RHO), 8, GeneralizedRoute::InnerCoefficients).unwrap();
        assert_eq!(base, inner, "{}", f.name());
        let plain = f.table(8);
        for (k, p) in base.iter().enumerate() {
            assert!(p.degree().unwrap_or(0) <= k);
            assert_eq!(p.eval(&int(1)), plain[k]);
        }
    }
    let a = generalized(Family::ReciprocalLog, 10);
    let log_coeffs = Family::ReciprocalLog.reciprocal_series(10);
    for k in 0..=10 {
        assert_eq!(a[k].eval(&int(-1)), log_coeffs[k]);
    }
}

#[test]
fn slow_series() {
    assert_eq!(slow_series_partial(SlowSeries::EulerGamma, 1), 0.5);
    let ln2 = slow_series_partial(SlowSeries::Ln2, 50);
    assert!((ln2 - std::f64::consts::LN_2).abs() < 2e-2, "{ln2}");
    let g: Vec<f64> = [10, 20, 40].iter().map(|&n| slow_series_partial(SlowSeries::EulerGamma, n)).collect();
    let gamma = 0.5772156649015329;
    assert!(g[0] < g[1] && g[1] < g[2] && g[2] < gamma);
}

fn lin(m: i64) -> Poly {
    Poly::linear(NU, int(m))
}

/// Reference values: ascending numerator coefficients and denominator exponents of (ν+1), (ν+2), ...
fn h_reference() -> Vec<(Vec<i64>, Vec<u32>)> {
    vec![
        (vec![1], vec![]),
        (vec![1], vec![1]),
        (vec![3, 1], vec![2, 1]),
        (vec![19, 8, 1], vec![3, 1, 1]),
        (vec![422, 379, 117, 17, 1], vec![4, 2, 1, 1]),
        (vec![7302, 5969, 1816, 294, 26, 1], vec![5, 2, 1, 1, 1]),
        (vec![1091052, 1674616, 1043637, 349786, 71155, 9412, 811, 42, 1], vec![6, 3, 2, 1, 1, 1]),
        (vec![36978156, 51572980, 29539597, 9292435, 1827401, 243311, 22535, 1417, 55, 1], vec![7, 3, 2, 1, 1, 1, 1]),
    ]
}

#[test]
fn bessel_reference_values() {
    let h = bessel_h_table(10);
    for (k, (num, exps)) in h_reference().into_iter().enumerate() {
        let mut den = Poly::constant(NU, fact(k as u64));
        for (m, e) in exps.iter().enumerate() {
            den = &den * &lin(m as i64 + 1).pow(*e);
        }
        let expected = RatFunc::new(Poly::from_ints(NU, &num), den.clone()).unwrap();
        assert_eq!(h[k], expected, "k={k}");
        assert_eq!(den, bessel_denominator(k as u32));
    }
    for (k, hk) in h.iter().enumerate() {
        let nd = hk.numer().degree().unwrap();
        let dd = hk.denom().degree().unwrap();
        assert_eq!(nd + k, dd);
        assert_eq!(hk.numer().leading() / hk.denom().leading(), fact(k as u64).recip());
    }
    assert_eq!(h, bessel_h_recurrence(10));
    assert_eq!(h[..=8].to_vec(), bessel_h_operator(8));
}

#[test]
fn bessel_half_orders() {
    let c = Family::Cosecant.table(8);
    let d = Family::Secant.table(8);
    let h = bessel_h_table(8);
    for k in 0..=8 {
        let four = Rational::from_integer(BigInt::from(4).pow(k as u32));
        assert_eq!(h[k].eval_rational(&rat(1, 2)).unwrap(), &four * &c[k]);
        assert_eq!(h[k].eval_rational(&rat(-1, 2)).unwrap(), &four * &d[k]);
    }
}

fn tgamma(x: f64) -> f64 {
    libm::tgamma(x)
}

#[test]
fn bessel_beta_recurrence() {
    for nu in [rat(0, 1), rat(3, 10), rat(17, 10), rat(5, 2)] {
        let v = to_f64(&nu);
        let h = bessel_h_rational(&nu, 6).unwrap();
        for k in 0..=6usize {
            let mut lhs = 0.0;
            for (j, hj) in h.iter().enumerate().take(k + 1) {
                let m = 2.0 * (k - j) as f64;
                let s = if (k - j) % 2 == 0 { 1.0 } else { -1.0 };
                lhs += s / (16f64.powi(j as i32) * to_f64(&fact(2 * (k - j) as u64))) * tgamma(m + v + 0.5)
                    / tgamma(m + 2.0 * v + 1.0)
                    * to_f64(hj);
            }
            let s = if k % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = std::f64::consts::PI.sqrt() / 2f64.powf(2.0 * k as f64 + 2.0 * v) * s
                / to_f64(&fact(2 * k as u64))
                / tgamma(v + 1.0);
            assert!(rel(lhs, rhs) < 1e-10, "nu={v} k={k} {lhs} {rhs}");
        }
    }
}

#[test]
fn bessel_zeros() {
    let (z, mz) = bessel_zero_estimate_exact(&int(0), 17).unwrap();
    assert!((z.re - 2.404825557695773).abs() < 1e-9 && z.im == 0.0);
    assert_eq!(mz, -z);
    let (z, _) = bessel_zero_estimate_exact(&rat(-3, 2), 17).unwrap();
    assert!((z.im.abs() - 1.199678640257655).abs() < 1e-9 && z.re.abs() < 1e-12);
    let (z, _) = bessel_zero_estimate_exact(&rat(-1, 3), 17).unwrap();
    assert!((z.re - 1.8663508588738).abs() < 1e-10, "{z}");
    let (w, _) = bessel_zero_estimate(Complex64::new(-1.0 / 3.0, 0.0), 17).unwrap();
    assert!((w.re - 1.8663508588738).abs() < 1e-9);
    assert!(bessel_zero_estimate(Complex64::new(-2.0, 0.0), 5).is_err());
    assert!(bessel_zero_estimate_exact(&int(-3), 5).is_err());
}

#[test]
fn bessel_ratio_monotone() {
    let h = bessel_h_rational(&int(0), 18).unwrap();
    let r: Vec<f64> = (1..=17).map(|k| to_f64(&(&h[k] / &h[k + 1]))).collect();
    for w in r.windows(2) {
        assert!(w[0] < w[1]);
    }
    let at17 = 2.0 * r[16].sqrt();
    assert!((2.0 * r[11].sqrt() - at17).abs() < 1e-4);
}
