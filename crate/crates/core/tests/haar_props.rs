mod common;

use common::{coord, podles, uq_generator};
use proptest::prelude::*;
use qsphere::coordalg::Coord;
use qsphere::haar::{haar, haar_a_power, haar_podles, inner};
use qsphere::podles::Podles;
use qsphere::qscalar::RationalQ;
use qsphere::uq::{act_left, act_right, r_action, UqElement};

/// `(1 - q^2) / (1 - q^{2j+2})`.
fn oracle_a_power(j: u32) -> RationalQ {
    let one = RationalQ::one();
    &(&one - &RationalQ::q_pow(2)) / &(&one - &RationalQ::q_pow(2 * j as i64 + 2))
}

#[test]
fn powers_of_a() {
    for j in 0..=10 {
        let x = Podles::gen_a().pow(j);
        assert_eq!(haar(&x.embed()).unwrap(), oracle_a_power(j), "j = {j}");
        assert_eq!(haar_a_power(j), oracle_a_power(j));
        assert_eq!(haar_podles(&x), oracle_a_power(j));
    }
}

#[test]
fn h_of_a_at_one_half() {
    let v = haar_a_power(1).eval(0.5).unwrap();
    assert!((v - 0.8).abs() < 1e-15);
}

#[test]
fn weighted_monomials_vanish() {
    for x in [Coord::a(), Coord::b(), Coord::c(), Coord::d(), Coord::a().times(&Coord::b())] {
        assert!(haar(&x).unwrap().is_zero());
    }
    assert_eq!(haar(&Coord::unit()).unwrap(), RationalQ::one());
}

#[test]
fn inner_product_is_positive_on_basis() {
    for x in [Coord::a(), Coord::b(), Coord::c(), Coord::d(), Coord::a().times(&Coord::c())] {
        assert!(inner(&x, &x).unwrap().eval(0.5).unwrap() > 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariance(x in coord(5, 3), f in uq_generator()) {
        let h = haar(&x).unwrap();
        prop_assert_eq!(haar(&act_left(&f, &x).unwrap()).unwrap(), &f.counit() * &h);
        prop_assert_eq!(haar(&act_right(&x, &f).unwrap()).unwrap(), &f.counit() * &h);
    }

    #[test]
    fn modular_property(x in coord(3, 2), y in coord(3, 2)) {
        let k = UqElement::k_pow(-2);
        let twisted = act_right(&act_left(&k, &y).unwrap(), &k).unwrap();
        prop_assert_eq!(haar(&x.times(&y)).unwrap(), haar(&twisted.times(&x)).unwrap());
    }

    #[test]
    fn twisted_trace(x in podles(3, 2), y in podles(3, 2)) {
        prop_assert_eq!(haar_podles(&x.times(&y)), haar_podles(&y.sigma().times(&x)));
    }

    #[test]
    fn r_f_r_e_exchange(x in podles(3, 2), y in podles(3, 2)) {
        let (ex, ey) = (x.embed(), y.embed());
        let (e, f) = (UqElement::e(), UqElement::f());
        let lhs = haar(&r_action(&f, &ex).unwrap().times(&r_action(&e, &ey).unwrap())).unwrap();
        let rhs = haar(&r_action(&e, &ex).unwrap().times(&r_action(&f, &ey).unwrap())).unwrap();
        prop_assert_eq!(lhs, &RationalQ::q_pow(2) * &rhs);
    }

    #[test]
    fn haar_on_sphere_agrees_with_embedding(x in podles(4, 3)) {
        prop_assert_eq!(haar_podles(&x), haar(&x.embed()).unwrap());
    }
}
