use num_complex::Complex64;
use partmeth_core::algebra::*;
use partmeth_core::Error;
use proptest::prelude::*;

const W: Symbol = Symbol("w");
const NU: Symbol = Symbol("nu");
const X: Symbol = Symbol("x");
const Y: Symbol = Symbol("y");

#[test]
fn examples() {
    assert_eq!(rat(1, 6) + rat(1, 3), rat(1, 2));
    let a = parse_poly("w + w^2/2", W).unwrap();
    assert_eq!(&a * &Poly::x(W), parse_poly("w^2 + w^3/2", W).unwrap());

    let num = Poly::linear(NU, int(3));
    let one = Poly::linear(NU, int(1));
    let den = &(&one * &one).scale(&int(2)) * &Poly::linear(NU, int(2));
    let h2 = RatFunc::new(num.clone(), den.clone()).unwrap();
    assert_eq!(h2.numer().leading(), rat(1, 2));
    assert_eq!(h2.denom().leading(), int(1));
    assert_eq!(Poly::gcd(h2.numer(), h2.denom()).degree(), Some(0));
    assert_eq!(RatFunc::new(h2.numer().clone(), h2.denom().clone()).unwrap(), h2);

    let v = poly_eval(&RingValue::from(h2.clone()), Complex64::new(0.0, 0.0)).unwrap();
    assert!((v.re - 0.75).abs() < 1e-15 && v.im == 0.0);
    assert_eq!(h2.eval_rational(&int(0)).unwrap(), rat(3, 4));
    let recip = RatFunc::new(Poly::one(NU), one).unwrap();
    let v = poly_eval(&RingValue::from(recip.clone()), Complex64::new(0.5, 0.0)).unwrap();
    assert!((v.re - 2.0 / 3.0).abs() < 1e-15);
    assert_eq!(poly_eval(&RingValue::from(recip), Complex64::new(-1.0, 0.0)), Err(Error::Pole));
}

#[test]
fn ring_tags_must_match() {
    let a = RingValue::from(rat(1, 6));
    let b = RingValue::from(Poly::x(W));
    assert!(matches!(a.try_add(&b), Err(Error::RingMismatch { .. })));
    assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch { .. })));
    assert!(Poly::x(W).try_add(&Poly::x(X)).is_err());
    assert_eq!(a.try_add(&RingValue::from(rat(1, 3))).unwrap(), RingValue::from(rat(1, 2)));
}

#[test]
fn pochhammer_examples() {
    assert_eq!(pochhammer(&int(-3), 4), int(0));
    assert_eq!(pochhammer(&rat(2, 7), 1), rat(2, 7));
    assert_eq!(pochhammer(&rat(2, 7), 0), int(1));
    let rho = Symbol("rho");
    assert_eq!(pochhammer(&-Poly::x(rho), 2), parse_poly("rho^2 - rho", rho).unwrap());
}

#[test]
fn canonical_rendering() {
    assert_eq!(rat(-3, 6).to_string(), "-1/2");
    assert_eq!(int(4).to_string(), "4");
    let p = parse_poly("3 - w/2 + 2w^2", W).unwrap();
    let text = p.render();
    assert_eq!(parse_poly(&text, W).unwrap(), p);
    let m = parse_multipoly("x^2 y + 3 - x", &[X, Y]).unwrap();
    assert_eq!(parse_multipoly(&m.render(), &[X, Y]).unwrap(), m);
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn small_poly(var: Symbol) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..5).prop_map(move |c| Poly::new(var, c))
}

fn small_multi() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), small_rational()), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(&[X, Y], terms.into_iter().map(|((a, b), c)| (vec![a, b], c))))
}

fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
    (small_poly(NU), prop::collection::vec(small_rational(), 1..3)).prop_map(|(n, roots)| {
        let mut den = Poly::one(NU);
        for r in roots {
            den = &den * &Poly::linear(NU, r);
        }
        RatFunc::new(n, den).unwrap()
    })
}

fn laws<R: Ring>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add_ref(b).add_ref(c), a.add_ref(&b.add_ref(c)));
    prop_assert_eq!(a.mul_ref(b).mul_ref(c), a.mul_ref(&b.mul_ref(c)));
    prop_assert_eq!(a.add_ref(b), b.add_ref(a));
    prop_assert_eq!(a.mul_ref(b), b.mul_ref(a));
    prop_assert_eq!(a.mul_ref(&b.add_ref(c)), a.mul_ref(b).add_ref(&a.mul_ref(c)));
    prop_assert!(a.add_ref(&a.neg_ref()).is_zero());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_laws(a in small_rational(), b in small_rational(), c in small_rational()) {
        laws(&a, &b, &c)?;
        prop_assert!(*a.denom() > num_bigint::BigInt::from(0));
        prop_assert_eq!(Rational::new(a.numer().clone(), a.denom().clone()), a.clone());
        prop_assert!(Rational::new_raw(a.numer().clone(), a.denom().clone()) == a);
    }

    #[test]
    fn poly_laws(a in small_poly(W), b in small_poly(W), c in small_poly(W)) {
        laws(&a, &b, &c)?;
        prop_assert!(a.is_zero() || a.leading() != int(0));
    }

    #[test]
    fn multipoly_laws(a in small_multi(), b in small_multi(), c in small_multi()) {
        laws(&a, &b, &c)?;
        prop_assert!(a.terms().all(|(_, c)| *c != int(0)));
    }

    #[test]
    fn ratfunc_laws(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
        laws(&a, &b, &c)?;
        prop_assert_eq!(RatFunc::new(a.numer().clone(), a.denom().clone()).unwrap(), a.clone());
        prop_assert_eq!(a.denom().leading(), int(1));
        prop_assert_eq!(Poly::gcd(a.numer(), a.denom()).degree(), Some(0));
    }

    #[test]
    fn pochhammer_split(x in small_rational(), m in 0u32..=8, n in 0u32..=8) {
        let shifted = &x + &int(i64::from(m));
        prop_assert_eq!(pochhammer(&x, m + n), pochhammer(&x, m) * pochhammer(&shifted, n));
    }

    #[test]
    fn multipoly_parse_round_trip(a in small_multi()) {
        prop_assert_eq!(parse_multipoly(&a.render(), &[X, Y]).unwrap(), a);
    }
}
