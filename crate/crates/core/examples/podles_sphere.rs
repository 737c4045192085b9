//! The standard Podleś sphere inside O(SU_q(2)) and its Haar state.

use qsphere::haar::{haar, haar_podles};
use qsphere::podles::Podles;
use qsphere::uq::{act_left, UqElement};

fn main() -> Result<(), qsphere::AlgebraError> {
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    println!("A  = {}", a.embed());
    println!("B  = {}", b.embed());
    println!("B* = {}", bs.embed());
    println!("B*B = {}", bs.times(&b));
    println!("BB* = {}", b.times(&bs));
    println!("BA = {}", b.times(&a));

    let x = &(&a * &b) + &bs.pow(2);
    println!("x = {x}");
    println!("x* = {}", x.star());
    println!("σ(x) = {}", x.sigma());
    let moved = act_left(&UqElement::e(), &x.embed())?;
    println!("E ⊳ x = {}", Podles::recognize(&moved)?);

    for j in 1..=4 {
        println!("h(A^{j}) = {}", haar_podles(&a.pow(j)));
    }
    println!("h(B*B) = {}", haar(&bs.times(&b).embed())?);
    Ok(())
}
