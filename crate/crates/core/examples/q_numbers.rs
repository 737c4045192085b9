//! Exact arithmetic in Q(q^{1/2}) and evaluation at a rational q0.

use num::BigRational;
use qsphere::qscalar::{qint, RationalQ, SurdCtx};

fn main() {
    let lambda = RationalQ::lambda();
    println!("lambda = q^-1 - q = {lambda}");
    for n in 1..=5 {
        println!("[{n}] = {}", qint(n));
    }

    // (1 - q^2)/(1 - q^4) reduces to 1/(1 + q^2)
    let one = RationalQ::one();
    let h_a = &(&one - &RationalQ::q_pow(2)) / &(&one - &RationalQ::q_pow(4));
    println!("(1 - q^2)/(1 - q^4) = {h_a}");

    let parsed = RationalQ::parse("(q^(1/2) + q^(-1/2))^2").expect("valid rational function");
    println!("(q^(1/2) + q^(-1/2))^2 = {parsed}");

    let ctx = SurdCtx::new(BigRational::new(1.into(), 2.into())).expect("0 < q0 < 1");
    let exact = ctx.eval(&parsed).expect("no pole at 1/2");
    let (a, b) = exact.parts();
    println!("at q0 = 1/2: {a} + {b}*sqrt(1/2) = {}", exact.to_f64());
    println!("h(A) at q0 = 1/2: {}", h_a.eval(0.5).expect("no pole"));
}
