mod common;

use common::{coeff, podles, podles_mono};
use proptest::prelude::*;
use qsphere::fodc::*;
use qsphere::podles::Podles;
use qsphere::qscalar::RationalQ;
use qsphere::uq::UqElement;

fn gens() -> [Podles; 3] {
    [Podles::gen_a(), Podles::gen_b(), Podles::gen_bs()]
}

#[test]
fn tau_of_eta_is_minus_one() {
    assert_eq!(pair_chain(&tau_cochain(), &eta()).unwrap(), RationalQ::from_int(-1));
}

#[test]
fn cyclicity_shortcut_for_eta() {
    let [a, b, bs] = gens();
    let qm2 = RationalQ::q_pow(-2);
    let three = RationalQ::from_int(3);
    let v = &(&(&three * &tau(&bs, &a, &b)) - &(&(&three * &qm2) * &tau(&bs, &b, &a)))
        + &(&(&RationalQ::q_pow(6) - &qm2) * &tau(&a, &a, &a));
    assert_eq!(v, RationalQ::from_int(-1));
}

#[test]
fn eta_is_twisted_cyclic() {
    assert_eq!(lambda_sigma_chain(&eta()), eta());
}

#[test]
fn boundary_of_eta() {
    let a = Podles::gen_a();
    let want = Chain::from_tensors(2, &[(&RationalQ::q_pow(4) - &RationalQ::q_pow(-2), vec![a.clone(), a])]).unwrap();
    assert_eq!(b_sigma_chain(&eta()), want);
}

#[test]
fn cyclic_one_cochains_vanish_on_a_a() {
    let a = Podles::gen_a();
    let phi = Cochain::new("h(x0 x1)", 2, |x| Ok(qsphere::haar::haar_podles(&x[0].times(&x[1]))));
    let lam = lambda_sigma(&phi).eval(&[a.clone(), a.clone()]).unwrap();
    assert_eq!(lam, -&phi.eval(&[a.clone(), a]).unwrap());
}

#[test]
fn tau_closed_forms() {
    let [a, b, bs] = gens();
    let h = |x: &Podles| qsphere::haar::haar_podles(x);
    let qm2 = RationalQ::q_pow(-2);
    let want = &(&(&RationalQ::q_pow(2) - &RationalQ::q_pow(-4)) * &h(&(&a.pow(3) - &a.pow(2)))) + &(&qm2 * &h(&(&a.pow(2) - &a)));
    assert_eq!(tau(&bs, &a, &b), want);
    let want = &(&(&qm2 - &RationalQ::q_pow(4)) * &h(&a.pow(3))) - &(&(&qm2 - &RationalQ::q_pow(2)) * &h(&a.pow(2)));
    assert_eq!(tau(&a, &a, &a), want);
}

#[test]
fn volume_form_is_normalized() {
    assert_eq!(volume_check().unwrap(), Podles::one());
}

#[test]
fn differential_examples() {
    assert!(differential(&Podles::one()).is_zero());
    let d = differential(&Podles::gen_b());
    assert_eq!(d.ecomp, qsphere::coordalg::Coord::a().pow(2).scale(&RationalQ::from_int(-1)));
    let d = differential(&Podles::gen_a());
    assert_eq!(d.fcomp, qsphere::coordalg::Coord::d().times(&qsphere::coordalg::Coord::c()));
}

#[test]
fn wedge_examples() {
    let [a, b, bs] = gens();
    let one = Podles::one();
    assert!(wedge_kernel(&one, &one, &a).unwrap().is_zero());
    assert!(wedge_kernel(&one, &b, &one).unwrap().is_zero());
    let direct = wedge_coeff(&[(one.clone(), bs.clone())], &[(one.clone(), b.clone())]).unwrap();
    assert_eq!(direct, wedge_kernel(&one, &bs, &b).unwrap());
    assert_eq!(qsphere::haar::haar_podles(&wedge_kernel(&bs, &a, &b).unwrap()), tau(&bs, &a, &b));
}

#[test]
fn localized_commutators_on_generators() {
    for x in gens() {
        assert_eq!(localized_commutator_check(&x), (true, true), "{x}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tau_is_a_twisted_cocycle(x in prop::collection::vec(podles_mono(3), 4)) {
        prop_assert!(b_sigma(&tau_cochain()).eval(&x).unwrap().is_zero());
    }

    #[test]
    fn tau_is_twisted_cyclic(x in prop::collection::vec(podles(2, 2), 3)) {
        prop_assert_eq!(lambda_sigma(&tau_cochain()).eval(&x).unwrap(), tau(&x[0], &x[1], &x[2]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tau_matches_volume_form(x in prop::collection::vec(podles(2, 2), 3)) {
        prop_assert_eq!(tau_omega(&x[0], &x[1], &x[2]).unwrap(), tau(&x[0], &x[1], &x[2]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn commutator_representation(x in podles(3, 3)) {
        prop_assert_eq!(localized_commutator_check(&x), (true, true));
    }

    #[test]
    fn leibniz_rule(x in podles(2, 2), y in podles(2, 2)) {
        let lhs = differential(&x.times(&y));
        let rhs = rmul(&differential(&x), &y).add(&lmul(&x, &differential(&y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn memoized_tau_matches_direct(x in prop::collection::vec(podles(2, 2), 3)) {
        prop_assert_eq!(tau(&x[0], &x[1], &x[2]), tau_direct(&x[0], &x[1], &x[2]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn tau_is_invariant(terms in prop::collection::vec((coeff(), prop::collection::vec(podles_mono(2), 3)), 1..=2)) {
        let chain = Chain::from_tensors(3, &terms).unwrap();
        let t = tau_cochain();
        let base = pair_chain(&t, &chain).unwrap();
        for f in [UqElement::e(), UqElement::f(), UqElement::k_pow(1)] {
            prop_assert_eq!(pair_chain(&t, &chain.act(&f).unwrap()).unwrap(), &f.counit() * &base);
        }
    }
}
