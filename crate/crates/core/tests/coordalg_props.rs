mod common;

use common::{coord, word, word_product};
use proptest::prelude::*;
use qsphere::coordalg::Coord;
use qsphere::podles::Podles;
use qsphere::qscalar::{Exact, RationalQ};
use qsphere::AlgebraError;

fn q() -> RationalQ {
    RationalQ::q()
}

#[test]
fn defining_relations() {
    let (a, b, c, d) = (Coord::a(), Coord::b(), Coord::c(), Coord::d());
    assert_eq!(a.times(&b), b.times(&a).scale(&q()));
    assert_eq!(a.times(&c), c.times(&a).scale(&q()));
    assert_eq!(b.times(&d), d.times(&b).scale(&q()));
    assert_eq!(c.times(&d), d.times(&c).scale(&q()));
    assert_eq!(b.times(&c), c.times(&b));
    assert_eq!(a.times(&d), &Coord::unit() + &b.times(&c).scale(&q()));
    assert_eq!(d.times(&a), &Coord::unit() + &b.times(&c).scale(&RationalQ::q_pow(-1)));
}

#[test]
fn podles_generators_satisfy_the_sphere_relations() {
    let a = -&Coord::b().times(&Coord::c()).scale(&RationalQ::q_pow(-1));
    let b = Coord::a().times(&Coord::c());
    let bs = -&Coord::d().times(&Coord::b());
    let q2 = RationalQ::q_pow(2);
    assert_eq!(bs.times(&b), &a - &a.times(&a));
    assert_eq!(b.times(&bs), &a.scale(&q2) - &a.times(&a).scale(&RationalQ::q_pow(4)));
    assert_eq!(a, Podles::gen_a().embed());
    assert_eq!(b, Podles::gen_b().embed());
    assert_eq!(bs, Podles::gen_bs().embed());
}

#[test]
fn star_on_generators() {
    assert_eq!(Coord::a().star().unwrap(), Coord::d());
    assert_eq!(Coord::b().star().unwrap(), Coord::c().scale(&-&q()));
    assert_eq!(Coord::c().star().unwrap(), Coord::b().scale(&-&RationalQ::q_pow(-1)));
    assert_eq!(Coord::d().star().unwrap(), Coord::a());
}

#[test]
fn antipode_on_generators() {
    assert_eq!(Coord::a().antipode().unwrap(), Coord::d());
    assert_eq!(Coord::d().antipode().unwrap(), Coord::a());
    assert_eq!(Coord::b().antipode().unwrap(), Coord::b().scale(&-&RationalQ::q_pow(-1)));
    assert_eq!(Coord::c().antipode().unwrap(), Coord::c().scale(&-&q()));
}

#[test]
fn hopf_maps_reject_localized_input() {
    let x = Coord::gen_binv(&Exact);
    assert!(matches!(x.coproduct(2), Err(AlgebraError::NotInHopfDomain)));
    assert!(matches!(x.antipode(), Err(AlgebraError::NotInHopfDomain)));
    assert!(matches!(x.star(), Err(AlgebraError::NotInHopfDomain)));
}

#[test]
fn localized_inverses() {
    let one = Coord::unit().localize();
    assert_eq!(Coord::b().localize().times(&Coord::gen_binv(&Exact)), one);
    assert_eq!(Coord::gen_cinv(&Exact).times(&Coord::c().localize()), one);
}

fn convolve(x: &Coord, left_antipode: bool) -> Coord {
    let mut acc = Coord::zero(&Exact);
    for (k, c) in x.coproduct(2).unwrap().terms() {
        let (l, r) = (Coord::from_mono(k[0]), Coord::from_mono(k[1]));
        let term = if left_antipode { l.antipode().unwrap().times(&r) } else { l.times(&r.antipode().unwrap()) };
        acc = &acc + &term.scale(c);
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rewriting_is_confluent(w in word(5)) {
        let left = word_product(&w);
        let right = w.iter().rev().fold(Coord::unit(), |acc, g| word_product(&[*g]).times(&acc));
        prop_assert_eq!(&left, &right);
        if w.len() >= 2 {
            let (u, v) = w.split_at(w.len() / 2);
            prop_assert_eq!(word_product(u).times(&word_product(v)), left);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counit_axiom(x in coord(3, 3)) {
        let mut left = Coord::zero(&Exact);
        let mut right = Coord::zero(&Exact);
        for (k, c) in x.coproduct(2).unwrap().terms() {
            left = &left + &Coord::from_mono(k[1]).scale(&(c * &Coord::from_mono(k[0]).counit().unwrap()));
            right = &right + &Coord::from_mono(k[0]).scale(&(c * &Coord::from_mono(k[1]).counit().unwrap()));
        }
        prop_assert_eq!(&left, &x);
        prop_assert_eq!(&right, &x);
    }

    #[test]
    fn antipode_axioms(x in coord(3, 3)) {
        let e = Coord::constant(x.counit().unwrap());
        prop_assert_eq!(convolve(&x, true), e.clone());
        prop_assert_eq!(convolve(&x, false), e);
    }

    #[test]
    fn coproduct_is_multiplicative(x in coord(2, 2), y in coord(2, 2)) {
        prop_assert_eq!(x.times(&y).coproduct(2).unwrap(), x.coproduct(2).unwrap().mul(&y.coproduct(2).unwrap()));
    }

    #[test]
    fn coassociativity(x in coord(3, 2)) {
        let d3 = x.coproduct(3).unwrap();
        let via = x.coproduct(2).unwrap();
        let mut acc = qsphere::coordalg::TensorElement::zero(3, &Exact);
        for (k, c) in via.terms() {
            let left = Coord::from_mono(k[0]).coproduct(2).unwrap();
            let right = qsphere::coordalg::TensorElement::from_factors(&[Coord::from_mono(k[1])], &Exact);
            let mut t = qsphere::coordalg::TensorElement::zero(3, &Exact);
            for (kk, cc) in left.terms() {
                for (k1, c1) in right.terms() {
                    t.add_term(vec![kk[0], kk[1], k1[0]], cc * c1);
                }
            }
            acc = acc.add(&t.scale(c));
        }
        prop_assert_eq!(acc, d3);
    }

    #[test]
    fn counit_is_multiplicative(x in coord(3, 2), y in coord(3, 2)) {
        prop_assert_eq!(x.times(&y).counit().unwrap(), &x.counit().unwrap() * &y.counit().unwrap());
    }

    #[test]
    fn star_is_an_involutive_antihomomorphism(x in coord(3, 2), y in coord(3, 2)) {
        prop_assert_eq!(x.times(&y).star().unwrap(), y.star().unwrap().times(&x.star().unwrap()));
        prop_assert_eq!(x.star().unwrap().star().unwrap(), x.clone());
        prop_assert_eq!(x.star().unwrap().antipode().unwrap().star().unwrap().antipode().unwrap(), x);
    }

    #[test]
    fn antipode_is_an_antihomomorphism(x in coord(2, 2), y in coord(2, 2)) {
        prop_assert_eq!(x.times(&y).antipode().unwrap(), y.antipode().unwrap().times(&x.antipode().unwrap()));
    }

    #[test]
    fn localization_embeds(x in coord(3, 2), y in coord(3, 2)) {
        prop_assert_eq!(x.localize().times(&y.localize()), x.times(&y).localize());
        prop_assert_eq!(x.localize().delocalize().unwrap(), x);
    }
}
