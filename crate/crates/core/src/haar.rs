//! Haar state `h` and the inner product `(x, y) = h(y* x)`.
//!
//! On normal monomials `h` vanishes unless the monomial is `(bc)^n`, where
//! `h((bc)^n) = (-q)^n (1 - q^2)/(1 - q^{2n+2})`.

use crate::coordalg::{Coord, CoordElement};
use crate::podles::Podles;
use crate::qscalar::{RationalQ, Scalar};
use crate::AlgebraError;

/// `h((bc)^n)`.
pub fn haar_bc_power(n: u32) -> RationalQ {
    let one = RationalQ::one();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let num = &RationalQ::from_int(sign) * &(&RationalQ::q_pow(n as i64) * &(&one - &RationalQ::q_pow(2)));
    let den = &one - &RationalQ::q_pow(2 * n as i64 + 2);
    &num / &den
}

/// `h(A^j) = (1 - q^2)/(1 - q^{2j+2})`.
pub fn haar_a_power(j: u32) -> RationalQ {
    let one = RationalQ::one();
    &(&one - &RationalQ::q_pow(2)) / &(&one - &RationalQ::q_pow(2 * j as i64 + 2))
}

pub fn haar<S: Scalar>(x: &CoordElement<S>) -> Result<S, AlgebraError> {
    x.require_hopf()?;
    let mut acc = S::zero();
    for (m, c) in x.terms() {
        if m.a == 0 && m.d == 0 && m.b == m.c {
            let v = S::from_rq(&haar_bc_power(m.b as u32), x.ctx())?;
            acc = acc.plus(&c.times(&v));
        }
    }
    Ok(acc)
}

/// `(x, y) = h(y* x)`.
pub fn inner<S: Scalar>(x: &CoordElement<S>, y: &CoordElement<S>) -> Result<S, AlgebraError> {
    haar(&y.star()?.times(x))
}

/// Haar state restricted to the Podleś sphere.
pub fn haar_podles(x: &Podles) -> RationalQ {
    let mut acc = RationalQ::zero();
    for ((i, j), c) in x.terms() {
        if *j == 0 {
            acc = &acc + &(c * &haar_a_power(*i));
        }
    }
    acc
}

/// Symbolic Haar state, a convenience wrapper.
pub fn haar_exact(x: &Coord) -> Result<RationalQ, AlgebraError> {
    haar(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::Exact;

    #[test]
    fn values() {
        assert!(haar(&Coord::unit()).unwrap().is_one());
        assert!(haar(&Coord::a()).unwrap().is_zero());
        for j in 1..=3 {
            let x = Podles::gen_a().pow(j).embed();
            assert_eq!(haar(&x).unwrap(), haar_a_power(j));
            assert_eq!(haar_podles(&Podles::gen_a().pow(j)), haar_a_power(j));
        }
        assert!((haar_a_power(1).eval(0.5).unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn orthogonality_of_generators() {
        assert!(inner(&Coord::a(), &Coord::b()).unwrap().is_zero());
        assert!(inner(&Coord::one(&Exact), &Coord::one(&Exact)).unwrap().is_one());
    }
}
