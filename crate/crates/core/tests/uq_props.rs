use qsphere::coordalg::Coord;
use qsphere::haar::inner;
use qsphere::qscalar::{Exact, RationalQ};
use qsphere::sample::Sampler;
use qsphere::uq::{act_left, act_right, pair, r_action, UqElement, UqMono};

fn gens() -> Vec<UqElement> {
    vec![UqElement::e(), UqElement::f(), UqElement::k_pow(1), UqElement::k_pow(-1)]
}

fn random_uq(s: &mut Sampler) -> UqElement {
    let m = UqMono::new(s.below(3), s.below(5) as i32 - 2, s.below(3));
    UqElement::monomial(m, s.small_coeff())
}

/// `f ⊳ x = Σ x_(1) ⟨f, x_(2)⟩` and `x ⊲ f = Σ ⟨f, x_(1)⟩ x_(2)` straight from the coproduct.
fn left_by_pairing(f: &UqElement, x: &Coord) -> Coord {
    let mut out = Coord::zero(&Exact);
    for (key, c) in x.coproduct(2).unwrap().terms() {
        let p = pair(f, &Coord::from_mono(key[1])).unwrap();
        if !p.is_zero() {
            out.add_term(key[0], c * &p);
        }
    }
    out
}

fn right_by_pairing(x: &Coord, f: &UqElement) -> Coord {
    let mut out = Coord::zero(&Exact);
    for (key, c) in x.coproduct(2).unwrap().terms() {
        let p = pair(f, &Coord::from_mono(key[0])).unwrap();
        if !p.is_zero() {
            out.add_term(key[1], c * &p);
        }
    }
    out
}

#[test]
fn actions_match_pairing_definition() {
    let mut s = Sampler::new(11);
    for _ in 0..40 {
        let x = s.coord(4, 3);
        let f = random_uq(&mut s);
        assert_eq!(act_left(&f, &x).unwrap(), left_by_pairing(&f, &x), "left {f} on {x}");
        assert_eq!(act_right(&x, &f).unwrap(), right_by_pairing(&x, &f), "right {f} on {x}");
    }
}

#[test]
fn hopf_pairing_laws() {
    let mut s = Sampler::new(12);
    for _ in 0..40 {
        let f = random_uq(&mut s);
        let g = random_uq(&mut s);
        let x = s.coord(3, 2);
        let y = s.coord(2, 2);
        // ⟨fg, x⟩ = ⟨f, x_(1)⟩⟨g, x_(2)⟩
        let mut rhs = RationalQ::zero();
        for (key, c) in x.coproduct(2).unwrap().terms() {
            let a = pair(&f, &Coord::from_mono(key[0])).unwrap();
            let b = pair(&g, &Coord::from_mono(key[1])).unwrap();
            rhs = &rhs + &(&(c * &a) * &b);
        }
        assert_eq!(pair(&f.times(&g), &x).unwrap(), rhs);
        // ⟨f, xy⟩ = ⟨f_(1), x⟩⟨f_(2), y⟩
        let mut rhs = RationalQ::zero();
        for (key, c) in f.coproduct(2).terms() {
            let a = pair(&UqElement::monomial(key[0], RationalQ::one()), &x).unwrap();
            let b = pair(&UqElement::monomial(key[1], RationalQ::one()), &y).unwrap();
            rhs = &rhs + &(&(c * &a) * &b);
        }
        assert_eq!(pair(&f, &x.times(&y)).unwrap(), rhs);
        assert_eq!(pair(&f, &Coord::unit()).unwrap(), f.counit());
    }
}

#[test]
fn inverse_antipode() {
    let mut s = Sampler::new(13);
    for _ in 0..30 {
        let f = random_uq(&mut s).times(&random_uq(&mut s));
        assert_eq!(f.antipode(true).antipode(false), f);
        assert_eq!(f.antipode(false).antipode(true), f);
    }
}

#[test]
fn actions_commute_and_respect_star() {
    let mut s = Sampler::new(14);
    for _ in 0..30 {
        let x = s.coord(3, 3);
        let f = random_uq(&mut s);
        let g = random_uq(&mut s);
        let lhs = act_left(&f, &act_right(&x, &g).unwrap()).unwrap();
        let rhs = act_right(&act_left(&f, &x).unwrap(), &g).unwrap();
        assert_eq!(lhs, rhs);
        // (f ⊳ x)* = S(f)* ⊳ x*, (x ⊲ f)* = x* ⊲ S(f)*
        let sf = f.antipode(false).star();
        assert_eq!(act_left(&f, &x).unwrap().star().unwrap(), act_left(&sf, &x.star().unwrap()).unwrap());
        assert_eq!(act_right(&x, &f).unwrap().star().unwrap(), act_right(&x.star().unwrap(), &sf).unwrap());
    }
}

#[test]
fn module_algebra_law() {
    let mut s = Sampler::new(15);
    for _ in 0..30 {
        let x = s.coord(3, 2);
        let y = s.coord(3, 2);
        for f in gens() {
            let lhs = act_left(&f, &x.times(&y)).unwrap();
            let mut rhs = Coord::zero(&Exact);
            for (key, c) in f.coproduct(2).terms() {
                let f1 = UqElement::monomial(key[0], RationalQ::one());
                let f2 = UqElement::monomial(key[1], RationalQ::one());
                rhs = &rhs + &act_left(&f1, &x).unwrap().times(&act_left(&f2, &y).unwrap()).scale(c);
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn r_is_a_star_representation() {
    let mut s = Sampler::new(16);
    for _ in 0..25 {
        let x = s.coord(3, 2);
        let y = s.coord(3, 2);
        for f in [UqElement::e(), UqElement::f(), UqElement::k_pow(1)] {
            let lhs = inner(&x, &r_action(&f, &y).unwrap()).unwrap();
            let rhs = inner(&r_action(&f.star(), &x).unwrap(), &y).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn r_table_on_podles_generators() {
    use qsphere::podles::Podles;
    let half = |h: i64| RationalQ::q_half_pow(h);
    let m = |a, b, c, d| Coord::from_mono(qsphere::coordalg::Mono::new(a, b, c, d));
    let e = UqElement::e();
    let f = UqElement::f();
    let (pa, pb, pbs) = (Podles::gen_a().embed(), Podles::gen_b().embed(), Podles::gen_bs().embed());
    assert_eq!(r_action(&e, &pb).unwrap(), m(2, 0, 0, 0).scale(&-&half(-1)));
    assert_eq!(r_action(&e, &pbs).unwrap(), m(0, 2, 0, 0).scale(&half(-3)));
    assert_eq!(r_action(&e, &pa).unwrap(), Coord::b().times(&Coord::a()).scale(&half(-3)));
    assert_eq!(r_action(&f, &pb).unwrap(), m(0, 0, 2, 0).scale(&-&half(3)));
    assert_eq!(r_action(&f, &pbs).unwrap(), m(0, 0, 0, 2).scale(&half(1)));
    assert_eq!(r_action(&f, &pa).unwrap(), Coord::d().times(&Coord::c()).scale(&half(1)));
}
