//! Trace formulas for the Haar state and the cocycle, and the spectral zeta function.

use num::complex::Complex64;
use num::BigRational;
use qsphere::podles::Podles;
use qsphere::spectral::{haar_trace_check, residue_value, tau_trace_check, zeta_merom, zeta_series, TruncatedSpace};

fn main() -> Result<(), qsphere::AlgebraError> {
    let q0 = BigRational::new(1.into(), 2.into());
    let space = TruncatedSpace::new(q0, 20)?;
    let z = Complex64::new(3.0, 0.0);
    let series = zeta_series(z, space.q0(), 120);
    println!("ζ(3): series {:.15}, continuation {:.15}", series.value.re, zeta_merom(z, space.q0(), 60).re);
    println!("residue at z = 2: {:.15}", residue_value(space.q0()));

    let a = Podles::gen_a();
    for r in haar_trace_check(&space, &a.pow(2), Complex64::new(4.0, 0.0), 16, 1e-4)? {
        println!("{}", r.to_text());
    }
    let (b, bs) = (Podles::gen_b(), Podles::gen_bs());
    for r in tau_trace_check(&space, [&bs, &a, &b], z, 16, 1e-3)? {
        println!("{}", r.to_text());
    }
    Ok(())
}
