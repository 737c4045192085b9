mod common;

use common::rational;
use num::BigRational;
use proptest::prelude::*;
use qsphere::qscalar::{qint, RationalQ, SurdCtx};

#[test]
fn qint_times_lambda() {
    let q_minus_qinv = &RationalQ::q() - &RationalQ::q_pow(-1);
    for n in 1..=30 {
        assert_eq!(&qint(n) * &q_minus_qinv, &RationalQ::q_pow(n) - &RationalQ::q_pow(-n), "n = {n}");
    }
}

#[test]
fn qint_values() {
    assert_eq!(qint(3).eval(0.5).unwrap(), 5.25);
    assert_eq!(qint(1), RationalQ::one());
}

#[test]
fn reduced_forms_are_canonical() {
    let one = RationalQ::one();
    let x = &(&one - &RationalQ::q_pow(2)) / &(&one - &RationalQ::q_pow(4));
    let y = &one / &(&one + &RationalQ::q_pow(2));
    assert_eq!(x, y);
    assert_eq!(x.to_string(), "1/(1 + q^2)");
    let z = &(&RationalQ::q_half_pow(1) + &RationalQ::q_half_pow(-1)) * &RationalQ::q_half_pow(1);
    assert_eq!(z, &RationalQ::q() + &one);
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(RationalQ::zero().inv().is_err());
    assert!(RationalQ::parse("1/(q - q)").is_err());
}

#[test]
fn exact_evaluation_at_rational_q0() {
    let ctx = SurdCtx::new(BigRational::new(1.into(), 4.into())).unwrap();
    // q^{1/2} = 1/2 exactly at q0 = 1/4
    let v = ctx.eval(&RationalQ::q_half_pow(3)).unwrap();
    assert_eq!(v.to_f64(), 0.125);
    assert!(SurdCtx::new(BigRational::new(3.into(), 2.into())).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RationalQ::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in rational(), b in rational(), q0 in 0.1f64..0.9) {
        let lhs = (&a * &b).eval(q0).unwrap();
        let rhs = a.eval(q0).unwrap() * b.eval(q0).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        let s = (&a + &b).eval(q0).unwrap();
        prop_assert!((s - a.eval(q0).unwrap() - b.eval(q0).unwrap()).abs() <= 1e-12 * (1.0 + s.abs()));
    }

    #[test]
    fn normalize_preserves_value(a in rational(), q0 in 0.1f64..0.9) {
        let n = a.normalize().unwrap();
        prop_assert_eq!(&n, &a);
        prop_assert!((n.eval(q0).unwrap() - a.eval(q0).unwrap()).abs() <= 1e-13 * (1.0 + a.eval(q0).unwrap().abs()));
    }

    #[test]
    fn render_parse_roundtrip(a in rational()) {
        prop_assert_eq!(RationalQ::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn exact_and_float_evaluation_agree(a in rational()) {
        let ctx = SurdCtx::new(BigRational::new(3.into(), 10.into())).unwrap();
        let exact = ctx.eval(&a).unwrap().to_f64();
        let float = a.eval(0.3).unwrap();
        prop_assert!((exact - float).abs() <= 1e-12 * (1.0 + float.abs()));
    }
}
