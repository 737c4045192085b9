//! The twisted cyclic 2-cocycle, the chain it detects, and the volume form.

use qsphere::fodc::{b_sigma, b_sigma_chain, eta, lambda_sigma, pair_chain, tau, tau_cochain, tau_omega, volume_check};
use qsphere::podles::Podles;

fn main() -> Result<(), qsphere::AlgebraError> {
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    println!("τ(B*, A, B) = {}", tau(&bs, &a, &b));
    println!("τ(A, A, A) = {}", tau(&a, &a, &a));
    println!("τ_ω(B*, A, B) = {}", tau_omega(&bs, &a, &b)?);

    let t = tau_cochain();
    let x = [a.clone(), b.clone(), bs.clone(), a.pow(2)];
    println!("(b_σ τ)(A, B, B*, A^2) = {}", b_sigma(&t).eval(&x)?);
    println!("(λ_σ τ)(B*, A, B) = {}", lambda_sigma(&t).eval(&[bs, a, b])?);

    let e = eta();
    println!("η = {e}");
    println!("τ(η) = {}", pair_chain(&t, &e)?);
    println!("b_σ(η) = {}", b_sigma_chain(&e));
    println!("volume form normalization = {}", volume_check()?);
    Ok(())
}
