//! Truncated Dirac operator: spectrum, real structure and grading.

use num::BigRational;
use qsphere::podles::Podles;
use qsphere::spectral::{commutant_checks, dcom_check, dirac_eigenvalues, group_spectrum, reality_checks, TruncatedSpace};

fn main() -> Result<(), qsphere::AlgebraError> {
    let q0: BigRational = std::env::args().nth(1).unwrap_or_else(|| "1/2".into()).parse().expect("q0 as p/q");
    let space = TruncatedSpace::new(q0, 8)?;
    println!("dim V_8 = {}", space.dim());
    for (v, m) in group_spectrum(&dirac_eigenvalues(&space, 6), 1e-9) {
        println!("{v:+12.6} x{m}");
    }
    for r in reality_checks(&space, 6, 1e-9)? {
        println!("{}", r.to_text());
    }
    let (b, bs) = (Podles::gen_b(), Podles::gen_bs());
    println!("{}", dcom_check(&space, &b, 6, 1e-10)?.to_text());
    for r in commutant_checks(&space, &b, &bs, 4, 1e-9)? {
        println!("{}", r.to_text());
    }
    Ok(())
}
