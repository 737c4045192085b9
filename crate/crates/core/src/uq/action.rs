//! Left action `f ⊳ x`, right action `x ⊲ f` and `R_f(x) = x ⊲ S^{-1}(f)`.
//!
//! On generators: `E⊳a = b`, `E⊳c = d`, `F⊳b = a`, `F⊳d = c`, `K⊳a = q^{-1/2}a`,
//! `K⊳b = q^{1/2}b`, `K⊳c = q^{-1/2}c`, `K⊳d = q^{1/2}d`; `c⊲E = a`, `d⊲E = b`,
//! `a⊲F = c`, `b⊲F = d`, `a⊲K = q^{-1/2}a`, `b⊲K = q^{-1/2}b`, `c⊲K = q^{1/2}c`,
//! `d⊲K = q^{1/2}d`. Products are handled by the twisted Leibniz rule coming from
//! `Δ(E) = E⊗K + K^{-1}⊗E` and `Δ(F) = F⊗K + K^{-1}⊗F`.

use super::UqElement;
use crate::coordalg::{mono_mul, CoordElement, Mono};
use crate::qscalar::{LaurentPoly, Scalar};
use crate::AlgebraError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    E,
    F,
    K(i32),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

fn letter_mono(l: usize) -> Mono {
    match l {
        A => Mono::new(1, 0, 0, 0),
        B => Mono::new(0, 1, 0, 0),
        C => Mono::new(0, 0, 1, 0),
        _ => Mono::new(0, 0, 0, 1),
    }
}

/// Weight of a letter under `K` in half-units of `q`.
fn k_weight(side: Side, l: usize) -> i64 {
    match (side, l) {
        (Side::Left, A) | (Side::Left, C) => -1,
        (Side::Left, _) => 1,
        (Side::Right, A) | (Side::Right, B) => -1,
        (Side::Right, _) => 1,
    }
}

/// Image letter of `E` or `F` acting on a letter, if nonzero.
fn raise(side: Side, g: Gen, l: usize) -> Option<usize> {
    match (side, g, l) {
        (Side::Left, Gen::E, A) => Some(B),
        (Side::Left, Gen::E, C) => Some(D),
        (Side::Left, Gen::F, B) => Some(A),
        (Side::Left, Gen::F, D) => Some(C),
        (Side::Right, Gen::E, C) => Some(A),
        (Side::Right, Gen::E, D) => Some(B),
        (Side::Right, Gen::F, A) => Some(C),
        (Side::Right, Gen::F, B) => Some(D),
        _ => None,
    }
}

fn mono_weight(side: Side, m: &Mono) -> i64 {
    m.a as i64 * k_weight(side, A)
        + m.b as i64 * k_weight(side, B)
        + m.c as i64 * k_weight(side, C)
        + m.d as i64 * k_weight(side, D)
}

/// Product of normal monomials with a Laurent prefactor, as a list of terms.
fn product(factors: &[Mono], coeff: LaurentPoly) -> Vec<(Mono, LaurentPoly)> {
    let mut acc = vec![(Mono::ONE, coeff)];
    for f in factors {
        let mut next = Vec::new();
        for (m, c) in &acc {
            for (m2, p) in mono_mul(m, f) {
                next.push((m2, c * &p));
            }
        }
        acc = next;
    }
    acc
}

/// Action of one generator on one normal monomial.
///
/// A run `x^n` of equal letters is handled in one step: `x^s y x^{n-1-s}` is
/// reordered to a multiple of `x^{n-1} y`, and the position weights are summed.
fn gen_on_mono(side: Side, g: Gen, m: &Mono) -> Vec<(Mono, LaurentPoly)> {
    if let Gen::K(j) = g {
        let w = mono_weight(side, m) * j as i64;
        return vec![(*m, LaurentPoly::q_half_pow(w))];
    }
    let counts = [m.a, m.b as u32, m.c as u32, m.d];
    let mut out = Vec::new();
    let mut prefix_w = 0i64;
    let mut suffix_w = mono_weight(side, m);
    for l in 0..4 {
        let n = counts[l] as i64;
        let wl = k_weight(side, l);
        suffix_w -= n * wl;
        if n > 0 {
            if let Some(img) = raise(side, g, l) {
                // y x = q^{e/2} x y
                let yx = mono_mul(&letter_mono(img), &letter_mono(l));
                let xy = mono_mul(&letter_mono(l), &letter_mono(img));
                let e = yx[0].1.as_monomial().expect("q-commuting pair").0
                    - xy[0].1.as_monomial().expect("q-commuting pair").0;
                let mut coeff = LaurentPoly::zero();
                for s in 0..n {
                    let pre = prefix_w + s * wl;
                    let suf = suffix_w + (n - 1 - s) * wl;
                    coeff.add_term(suf - pre + e * (n - 1 - s), num::BigRational::from_integer(1.into()));
                }
                let mut pre = [0u32; 4];
                pre[..l].copy_from_slice(&counts[..l]);
                pre[l] = counts[l] - 1;
                let mut post = [0u32; 4];
                post[l + 1..].copy_from_slice(&counts[l + 1..]);
                let pm = Mono::new(pre[0], pre[1] as i32, pre[2] as i32, pre[3]);
                let qm = Mono::new(post[0], post[1] as i32, post[2] as i32, post[3]);
                out.extend(product(&[pm, letter_mono(img), qm], coeff));
            }
        }
        prefix_w += n * wl;
    }
    out
}

fn gen_on_elem<S: Scalar>(side: Side, g: Gen, x: &CoordElement<S>) -> CoordElement<S> {
    let ctx = x.ctx().clone();
    x.map_monomials(|m| {
        let mut out = CoordElement::zero(&ctx);
        for (mm, p) in gen_on_mono(side, g, m) {
            out.add_term(mm, S::from_poly(&p, &ctx));
        }
        out
    })
}

/// `f ⊳ x = Σ x_(1) ⟨f, x_(2)⟩`.
pub fn act_left<S: Scalar>(f: &UqElement, x: &CoordElement<S>) -> Result<CoordElement<S>, AlgebraError> {
    x.require_hopf()?;
    let ctx = x.ctx().clone();
    let mut out = CoordElement::zero(&ctx);
    for (m, c) in f.terms() {
        // F^f K^k E^e ⊳ x = F^f ⊳ (K^k ⊳ (E^e ⊳ x))
        let mut y = x.clone();
        for g in UqElement::word(m).into_iter().rev() {
            y = gen_on_elem(Side::Left, g, &y);
        }
        out = &out + &y.scale(&S::from_rq(c, &ctx)?);
    }
    Ok(out)
}

/// `x ⊲ f = Σ ⟨f, x_(1)⟩ x_(2)`.
pub fn act_right<S: Scalar>(x: &CoordElement<S>, f: &UqElement) -> Result<CoordElement<S>, AlgebraError> {
    x.require_hopf()?;
    let ctx = x.ctx().clone();
    let mut out = CoordElement::zero(&ctx);
    for (m, c) in f.terms() {
        // x ⊲ F^f K^k E^e = ((x ⊲ F^f) ⊲ K^k) ⊲ E^e
        let mut y = x.clone();
        for g in UqElement::word(m) {
            y = gen_on_elem(Side::Right, g, &y);
        }
        out = &out + &y.scale(&S::from_rq(c, &ctx)?);
    }
    Ok(out)
}

/// `R_f(x) = x ⊲ S^{-1}(f)`.
pub fn r_action<S: Scalar>(f: &UqElement, x: &CoordElement<S>) -> Result<CoordElement<S>, AlgebraError> {
    act_right(x, &f.antipode(true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coordalg::Coord;
    use crate::qscalar::RationalQ;

    fn e() -> UqElement {
        UqElement::e()
    }
    fn f() -> UqElement {
        UqElement::f()
    }
    fn k() -> UqElement {
        UqElement::k_pow(1)
    }

    #[test]
    fn left_tables() {
        assert_eq!(act_left(&e(), &Coord::a()).unwrap(), Coord::b());
        assert_eq!(act_left(&e(), &Coord::c()).unwrap(), Coord::d());
        assert_eq!(act_left(&f(), &Coord::b()).unwrap(), Coord::a());
        assert_eq!(act_left(&f(), &Coord::d()).unwrap(), Coord::c());
        assert_eq!(act_left(&k(), &Coord::a()).unwrap(), Coord::a().scale(&RationalQ::q_half_pow(-1)));
        assert_eq!(act_left(&k(), &Coord::b()).unwrap(), Coord::b().scale(&RationalQ::q_half_pow(1)));
    }

    #[test]
    fn right_tables() {
        assert_eq!(act_right(&Coord::c(), &e()).unwrap(), Coord::a());
        assert_eq!(act_right(&Coord::d(), &e()).unwrap(), Coord::b());
        assert_eq!(act_right(&Coord::a(), &f()).unwrap(), Coord::c());
        assert_eq!(act_right(&Coord::b(), &f()).unwrap(), Coord::d());
        assert_eq!(act_right(&Coord::c(), &k()).unwrap(), Coord::c().scale(&RationalQ::q_half_pow(1)));
        assert!(act_right(&Coord::a(), &e()).unwrap().is_zero());
    }
}
