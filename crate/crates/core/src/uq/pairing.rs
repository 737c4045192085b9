//! Dual pairing `⟨f, x⟩` computed recursively through coproducts:
//! `⟨g·f', x⟩ = Σ ⟨g, x_(1)⟩⟨f', x_(2)⟩` for a generator `g`.

use std::collections::HashMap;
use std::sync::Mutex;

use super::{Gen, UqElement, UqMono};
use crate::coordalg::{Coord, Mono};
use crate::qscalar::RationalQ;
use crate::AlgebraError;

/// Pairing of a generator with a normal monomial.
///
/// `⟨K^j, a⟩ = q^{-j/2}`, `⟨K^j, d⟩ = q^{j/2}`, `⟨E, c⟩ = ⟨F, b⟩ = 1`, all other
/// generator pairs vanish; products are expanded with the coproduct of the generator.
fn pair_gen(g: Gen, m: &Mono) -> RationalQ {
    match g {
        Gen::K(j) => {
            if m.b != 0 || m.c != 0 {
                return RationalQ::zero();
            }
            RationalQ::q_half_pow(j as i64 * (m.d as i64 - m.a as i64))
        }
        Gen::E | Gen::F => {
            // exactly one c (for E) or b (for F), the remaining letters a or d
            let (one, other) = if g == Gen::E { (m.c, m.b) } else { (m.b, m.c) };
            if one != 1 || other != 0 {
                return RationalQ::zero();
            }
            // K^{-1} on the a's before it, K on the d's after it
            RationalQ::q_half_pow(m.a as i64 + m.d as i64)
        }
    }
}

type Memo = HashMap<(UqMono, Mono), RationalQ>;

fn memo() -> &'static Mutex<Memo> {
    static MEMO: std::sync::OnceLock<Mutex<Memo>> = std::sync::OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn pair_mono(f: &UqMono, m: &Mono) -> RationalQ {
    if *f == UqMono::ONE {
        return if m.b == 0 && m.c == 0 { RationalQ::one() } else { RationalQ::zero() };
    }
    if let Some(v) = memo().lock().unwrap().get(&(*f, *m)) {
        return v.clone();
    }
    let word = UqElement::word(f);
    let v = if word.len() == 1 {
        pair_gen(word[0], m)
    } else {
        let g = word[0];
        let rest = match g {
            Gen::F => UqMono::new(f.f - 1, f.k, f.e),
            Gen::K(_) => UqMono::new(0, 0, f.e),
            Gen::E => UqMono::new(0, 0, f.e - 1),
        };
        let delta = Coord::from_mono(*m).coproduct(2).expect("unlocalized monomial");
        let mut acc = RationalQ::zero();
        for (key, c) in delta.terms() {
            let left = pair_gen(g, &key[0]);
            if left.is_zero() {
                continue;
            }
            let right = pair_mono(&rest, &key[1]);
            acc = &acc + &(&(c * &left) * &right);
        }
        acc
    };
    memo().lock().unwrap().insert((*f, *m), v.clone());
    v
}

/// Bilinear pairing between the enveloping algebra and the coordinate algebra.
pub fn pair(f: &UqElement, x: &Coord) -> Result<RationalQ, AlgebraError> {
    x.require_hopf()?;
    let mut acc = RationalQ::zero();
    for (fm, fc) in f.terms() {
        for (xm, xc) in x.terms() {
            let v = pair_mono(fm, xm);
            if !v.is_zero() {
                acc = &acc + &(&(fc * xc) * &v);
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_values() {
        assert!(pair(&UqElement::e(), &Coord::c()).unwrap().is_one());
        assert!(pair(&UqElement::f(), &Coord::b()).unwrap().is_one());
        assert!(pair(&UqElement::e(), &Coord::a()).unwrap().is_zero());
        assert_eq!(pair(&UqElement::k_pow(1), &Coord::d()).unwrap(), RationalQ::q_half_pow(1));
        assert_eq!(pair(&UqElement::k_pow(-1), &Coord::a()).unwrap(), RationalQ::q_half_pow(1));
        assert!(pair(&UqElement::one(), &Coord::unit()).unwrap().is_one());
    }
}
