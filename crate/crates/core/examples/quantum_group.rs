//! The coordinate algebra O(SU_q(2)), its Hopf structure, and the actions of U_q(su_2).

use qsphere::coordalg::Coord;
use qsphere::uq::{act_left, act_right, pair, r_action, UqElement};

fn main() -> Result<(), qsphere::AlgebraError> {
    let (a, b, c, d) = (Coord::a(), Coord::b(), Coord::c(), Coord::d());
    println!("b*a = {}", b.times(&a));
    println!("d*a = {}", d.times(&a));
    println!("a*d - q*b*c = {}", &a.times(&d) - &b.times(&c).scale(&qsphere::qscalar::RationalQ::q()));

    let x = a.times(&b);
    println!("Δ(ab) = {:?}", x.coproduct(2)?);
    println!("S(ab) = {}", x.antipode()?);
    println!("(ab)* = {}", x.star()?);

    let (e, f, k) = (UqElement::e(), UqElement::f(), UqElement::k_pow(1));
    println!("EF - FE = {}", &(&e * &f) - &(&f * &e));
    println!("<E, c> = {}, <K, a> = {}", pair(&e, &c)?, pair(&k, &a)?);
    println!("E ⊳ a = {}", act_left(&e, &a)?);
    println!("c ⊲ E = {}", act_right(&c, &e)?);
    println!("R_F(a^2) = {}", r_action(&f, &a.pow(2))?);
    Ok(())
}
