#![allow(dead_code)]

use proptest::prelude::*;
use qsphere::coordalg::Coord;
use qsphere::podles::Podles;
use qsphere::qscalar::RationalQ;
use qsphere::uq::UqElement;

/// Coefficients ±1, ±2 times q^{h/2}, |h| ≤ 2.
pub fn coeff() -> impl Strategy<Value = RationalQ> {
    (prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)], -2i64..=2)
        .prop_map(|(c, h)| &RationalQ::from_int(c) * &RationalQ::q_half_pow(h))
}

pub fn word(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..4, 0..=max_len)
}

pub fn word_product(w: &[usize]) -> Coord {
    let gens = [Coord::a(), Coord::b(), Coord::c(), Coord::d()];
    w.iter().fold(Coord::unit(), |acc, g| acc.times(&gens[*g]))
}

/// Sums of up to `terms` products of at most `max_len` generators.
pub fn coord(max_len: usize, terms: usize) -> impl Strategy<Value = Coord> {
    prop::collection::vec((coeff(), word(max_len)), 1..=terms).prop_map(|ts| {
        ts.iter().fold(Coord::zero(&qsphere::qscalar::Exact), |acc, (c, w)| &acc + &word_product(w).scale(c))
    })
}

pub fn podles_mono(max_exp: u32) -> impl Strategy<Value = Podles> {
    (0..=max_exp, -(max_exp as i32)..=max_exp as i32).prop_map(|(i, j)| Podles::basis(i, j))
}

pub fn podles(max_exp: u32, terms: usize) -> impl Strategy<Value = Podles> {
    prop::collection::vec((coeff(), podles_mono(max_exp)), 1..=terms)
        .prop_map(|ts| ts.iter().fold(Podles::zero(), |acc, (c, m)| &acc + &m.scale(c)))
}

pub fn uq_generator() -> impl Strategy<Value = UqElement> {
    prop_oneof![
        Just(UqElement::e()),
        Just(UqElement::f()),
        Just(UqElement::k_pow(1)),
        Just(UqElement::k_pow(-1)),
    ]
}

/// Elements of the rational function field with small numerators and denominators.
pub fn rational() -> impl Strategy<Value = RationalQ> {
    (coeff(), coeff(), coeff(), 1i64..=3).prop_map(|(a, b, c, n)| {
        let den = &(&RationalQ::from_int(n) + &c) + &RationalQ::q_pow(2);
        &(&a + &b) / &den
    })
}
