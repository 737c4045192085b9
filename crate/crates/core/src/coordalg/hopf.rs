use std::collections::BTreeMap;
use std::fmt;

use super::{mono_mul, CoordElement, Mono};
use crate::qscalar::{LaurentPoly, Scalar};
use crate::AlgebraError;

/// Element of an `n`-fold tensor power of the coordinate algebra.
#[derive(Clone, PartialEq)]
pub struct TensorElement<S: Scalar> {
    arity: usize,
    terms: BTreeMap<Vec<Mono>, S>,
    ctx: S::Ctx,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero(arity: usize, ctx: &S::Ctx) -> Self {
        Self { arity, terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn one(arity: usize, ctx: &S::Ctx) -> Self {
        let mut t = Self::zero(arity, ctx);
        t.add_term(vec![Mono::ONE; arity], S::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mono>, &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<Mono>, c: S) {
        assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Pure tensor of elements.
    pub fn from_factors(factors: &[CoordElement<S>], ctx: &S::Ctx) -> Self {
        let mut t = Self::one(0, ctx);
        for f in factors {
            let mut next = Self::zero(t.arity + 1, ctx);
            for (k, c) in &t.terms {
                for (m, v) in f.terms() {
                    let mut key = k.clone();
                    key.push(*m);
                    next.add_term(key, c.times(v));
                }
            }
            t = next;
        }
        t
    }

    /// Componentwise product `(x1⊗..⊗xn)(y1⊗..⊗yn) = x1y1⊗..⊗xnyn`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity, &self.ctx);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                // expand each slot, then take the cartesian product
                let mut partial: Vec<(Vec<Mono>, LaurentPoly)> = vec![(Vec::new(), LaurentPoly::one())];
                for (m1, m2) in k1.iter().zip(k2) {
                    let prods = mono_mul(m1, m2);
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (key, p) in &partial {
                        for (m, pm) in &prods {
                            let mut nk = key.clone();
                            nk.push(*m);
                            next.push((nk, p * pm));
                        }
                    }
                    partial = next;
                }
                let c = c1.times(c2);
                for (key, p) in partial {
                    out.add_term(key, c.times(&S::from_poly(&p, &self.ctx)));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.arity, &self.ctx);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.times(c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&S::one().negate()))
    }

    /// Applies a linear map slot by slot (multilinear extension).
    pub fn map_slot<F>(&self, slot: usize, mut f: F) -> Self
    where
        F: FnMut(&Mono) -> CoordElement<S>,
    {
        let mut out = Self::zero(self.arity, &self.ctx);
        for (k, c) in &self.terms {
            for (m, v) in f(&k[slot]).terms() {
                let mut key = k.clone();
                key[slot] = *m;
                out.add_term(key, c.times(v));
            }
        }
        out
    }

    /// Multiplies all slots together: `x1 ⊗ ... ⊗ xn -> x1 ... xn`.
    pub fn multiply_out(&self) -> CoordElement<S> {
        let mut out = CoordElement::zero(&self.ctx);
        for (k, c) in &self.terms {
            let mut acc = CoordElement::scalar(c.clone(), &self.ctx);
            for m in k {
                acc = acc.times(&CoordElement::monomial(*m, S::one(), &self.ctx));
            }
            out = &out + &acc;
        }
        out
    }
}

impl<S: Scalar> fmt::Debug for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let ks: Vec<String> = k.iter().map(|m| m.to_string()).collect();
                format!("({:?})*{}", c, ks.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Matrix entry `u_{ij}` of the fundamental corepresentation `[[a, b], [c, d]]`.
fn u_entry(i: usize, j: usize) -> Mono {
    match (i, j) {
        (0, 0) => Mono::new(1, 0, 0, 0),
        (0, 1) => Mono::new(0, 1, 0, 0),
        (1, 0) => Mono::new(0, 0, 1, 0),
        _ => Mono::new(0, 0, 0, 1),
    }
}

/// `Δ^{(n)}(u_ij) = Σ u_{i k1} ⊗ u_{k1 k2} ⊗ ... ⊗ u_{k_{n-1} j}`.
fn generator_coproduct<S: Scalar>(i: usize, j: usize, n: usize, ctx: &S::Ctx) -> TensorElement<S> {
    let mut out = TensorElement::zero(n, ctx);
    for mask in 0..(1usize << (n - 1)) {
        let mut key = Vec::with_capacity(n);
        let mut row = i;
        for s in 0..n {
            let col = if s == n - 1 { j } else { (mask >> s) & 1 };
            key.push(u_entry(row, col));
            row = col;
        }
        out.add_term(key, S::one());
    }
    out
}

fn tensor_pow<S: Scalar>(x: &TensorElement<S>, e: u32) -> TensorElement<S> {
    let mut acc = TensorElement::one(x.arity(), &x.ctx);
    for _ in 0..e {
        acc = acc.mul(x);
    }
    acc
}

impl<S: Scalar> CoordElement<S> {
    /// Iterated coproduct into `n ≥ 2` tensor factors.
    pub fn coproduct(&self, n: usize) -> Result<TensorElement<S>, AlgebraError> {
        assert!(n >= 1);
        self.require_hopf()?;
        let ctx = self.ctx();
        let gens: Vec<TensorElement<S>> =
            [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(i, j)| generator_coproduct(i, j, n, ctx)).collect();
        let mut out = TensorElement::zero(n, ctx);
        for (m, c) in self.terms() {
            let img = tensor_pow(&gens[0], m.a)
                .mul(&tensor_pow(&gens[1], m.b as u32))
                .mul(&tensor_pow(&gens[2], m.c as u32))
                .mul(&tensor_pow(&gens[3], m.d));
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    pub fn counit(&self) -> Result<S, AlgebraError> {
        self.require_hopf()?;
        let mut acc = S::zero();
        for (m, c) in self.terms() {
            if m.b == 0 && m.c == 0 {
                acc = acc.plus(c);
            }
        }
        Ok(acc)
    }

    /// `S(a^i b^j c^k d^l) = a^l (-q^{-1}c)^k (-q b)^j d^i`.
    pub fn antipode(&self) -> Result<Self, AlgebraError> {
        self.require_hopf()?;
        let ctx = self.ctx().clone();
        Ok(self.map_monomials(|m| {
            let sign = if (m.b + m.c) % 2 == 0 { 1 } else { -1 };
            let coeff = LaurentPoly::from_terms([(2 * (m.c - m.b) as i64, sign)]);
            let left = Mono::new(m.d, m.b, m.c, 0);
            let mut out = CoordElement::zero(&ctx);
            for (mm, p) in mono_mul(&left, &Mono::new(0, 0, 0, m.a)) {
                out.add_term(mm, S::from_poly(&(&p * &coeff), &ctx));
            }
            out
        }))
    }

    /// Involution with `a* = d`, `b* = -q c`, `c* = -q^{-1} b`, `d* = a`; `q` is real.
    pub fn star(&self) -> Result<Self, AlgebraError> {
        self.require_hopf()?;
        let ctx = self.ctx().clone();
        Ok(self.map_monomials(|m| {
            // (a^i b^j c^k d^l)* = a^l (-q^{-1} b)^k (-q c)^j d^i
            let sign = if (m.b + m.c) % 2 == 0 { 1 } else { -1 };
            let coeff = LaurentPoly::from_terms([(2 * (m.b - m.c) as i64, sign)]);
            let left = Mono::new(m.d, m.c, m.b, 0);
            let mut out = CoordElement::zero(&ctx);
            for (mm, p) in mono_mul(&left, &Mono::new(0, 0, 0, m.a)) {
                out.add_term(mm, S::from_poly(&(&p * &coeff), &ctx));
            }
            out
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coordalg::Coord;
    use crate::qscalar::{Exact, RationalQ};

    #[test]
    fn generator_stars() {
        let q = RationalQ::q();
        assert_eq!(Coord::a().star().unwrap(), Coord::d());
        assert_eq!(Coord::b().star().unwrap(), Coord::c().scale(&-q.clone()));
        assert_eq!(Coord::c().star().unwrap(), Coord::b().scale(&-q.inv().unwrap()));
    }

    #[test]
    fn coproduct_of_a() {
        let t = Coord::a().coproduct(2).unwrap();
        let mut expect = TensorElement::zero(2, &Exact);
        expect.add_term(vec![Mono::new(1, 0, 0, 0), Mono::new(1, 0, 0, 0)], RationalQ::one());
        expect.add_term(vec![Mono::new(0, 1, 0, 0), Mono::new(0, 0, 1, 0)], RationalQ::one());
        assert_eq!(t, expect);
    }

    #[test]
    fn counit_values() {
        assert!(Coord::a().counit().unwrap().is_one());
        assert!(Coord::b().counit().unwrap().is_zero());
    }

    #[test]
    fn localized_rejected() {
        let x = Coord::gen_binv(&Exact);
        assert_eq!(x.star().err(), Some(AlgebraError::NotInHopfDomain));
        assert_eq!(x.coproduct(2).err(), Some(AlgebraError::NotInHopfDomain));
    }
}
