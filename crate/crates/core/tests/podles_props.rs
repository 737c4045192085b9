mod common;

use common::{coeff, podles, uq_generator};
use proptest::prelude::*;
use qsphere::coordalg::Coord;
use qsphere::podles::Podles;
use qsphere::qscalar::RationalQ;
use qsphere::uq::{act_left, act_right, UqElement};
use qsphere::AlgebraError;

fn basis_upto(total: u32) -> Vec<Podles> {
    let mut out = Vec::new();
    for i in 0..=total {
        for j in -((total - i) as i32)..=(total - i) as i32 {
            out.push(Podles::basis(i, j));
        }
    }
    out
}

#[test]
fn sphere_relations() {
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    let q2 = RationalQ::q_pow(2);
    assert_eq!(b.times(&a), a.times(&b).scale(&q2));
    assert_eq!(a.times(&bs), bs.times(&a).scale(&q2));
    assert_eq!(bs.times(&b), &a - &a.pow(2));
    assert_eq!(b.times(&bs), &a.scale(&q2) - &a.pow(2).scale(&RationalQ::q_pow(4)));
    assert_eq!(a.star(), a);
    assert_eq!(b.star(), bs);
}

#[test]
fn embed_is_injective_up_to_degree_six() {
    // recognize is linear and inverts embed on a basis
    for x in basis_upto(6) {
        assert_eq!(Podles::recognize(&x.embed()).unwrap(), x);
    }
}

#[test]
fn embedding_matches_coordinate_star() {
    for x in basis_upto(3) {
        assert_eq!(x.star().embed(), x.embed().star().unwrap(), "{x}");
    }
}

#[test]
fn recognize_rejects_non_invariant_elements() {
    assert!(matches!(Podles::recognize(&Coord::a()), Err(AlgebraError::NotInSubalgebra(_))));
    assert!(Podles::recognize(&Coord::a().times(&Coord::a())).is_err());
    assert!(Podles::recognize(&Coord::a().times(&Coord::d())).is_ok());
}

#[test]
fn sphere_is_right_k_invariant() {
    let k = UqElement::k_pow(1);
    for x in basis_upto(4) {
        assert_eq!(act_right(&x.embed(), &k).unwrap(), x.embed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn recognize_inverts_embed(x in podles(3, 4)) {
        prop_assert_eq!(Podles::recognize(&x.embed()).unwrap(), x);
    }

    #[test]
    fn embed_is_an_algebra_map(x in podles(2, 3), y in podles(2, 3)) {
        prop_assert_eq!(x.times(&y).embed(), x.embed().times(&y.embed()));
        prop_assert_eq!((&x + &y).embed(), &x.embed() + &y.embed());
    }

    #[test]
    fn recognize_is_linear(x in podles(3, 3), y in podles(3, 3), c in coeff()) {
        let z = &x.embed() + &y.embed().scale(&c);
        prop_assert_eq!(Podles::recognize(&z).unwrap(), &x + &y.scale(&c));
    }

    #[test]
    fn sigma_is_k_inverse_squared_action(x in podles(3, 3)) {
        let y = act_left(&UqElement::k_pow(-2), &x.embed()).unwrap();
        prop_assert_eq!(Podles::recognize(&y).unwrap(), x.sigma());
        prop_assert_eq!(x.sigma().sigma_inverse(), x);
    }

    #[test]
    fn sphere_is_action_stable(x in podles(3, 3), f in uq_generator()) {
        prop_assert!(Podles::recognize(&act_left(&f, &x.embed()).unwrap()).is_ok());
    }

    #[test]
    fn star_is_an_antihomomorphism(x in podles(2, 2), y in podles(2, 2)) {
        prop_assert_eq!(x.times(&y).star(), y.star().times(&x.star()));
    }
}
