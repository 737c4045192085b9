//! The standard Podleś sphere: generated by `A = -q^{-1}bc`, `B = ac`, `B* = -db` with
//! `BA = q^2 AB`, `AB* = q^2 B*A`, `B*B = A - A^2`, `BB* = q^2 A - q^4 A^2`.
//!
//! Basis `A^i B^j` (`j ≥ 0`) and `A^i B*^k` (`k ≥ 1`), keyed by `(i, j)` with `j = -k`
//! for the `B*` powers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coordalg::{Coord, Mono};
use crate::qscalar::{LaurentPoly, RationalQ};
use crate::uq::{act_right, UqElement};
use crate::AlgebraError;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Podles {
    terms: BTreeMap<(u32, i32), RationalQ>,
}

/// Normal form of `X1 X2` where `X` is `B^j` (`j ≥ 0`) or `B*^{-j}` (`j < 0`):
/// a list of `(A-power, signed B-power, coefficient)`.
fn mul_b_parts(j1: i32, j2: i32) -> Vec<(u32, i32, LaurentPoly)> {
    if j1 >= 0 && j2 >= 0 || j1 <= 0 && j2 <= 0 {
        return vec![(0, j1 + j2, LaurentPoly::one())];
    }
    if j1 > 0 {
        // B^{j1} B*^{k}: B^{j1-1} (q^2 A - q^4 A^2) B*^{k-1}, B^m A^n = q^{2mn} A^n B^m
        let m = (j1 - 1) as i64;
        let mut out = Vec::new();
        for (n, coeff) in [(1i64, LaurentPoly::q_pow(2)), (2, -LaurentPoly::q_pow(4))] {
            let c = coeff.shift(4 * m * n);
            for (i, j, p) in mul_b_parts(j1 - 1, j2 + 1) {
                out.push((i + n as u32, j, &c * &p));
            }
        }
        out
    } else {
        // B*^{k} B^{j2}: B*^{k-1} (A - A^2) B^{j2-1}, B*^m A^n = q^{-2mn} A^n B*^m
        let m = (-j1 - 1) as i64;
        let mut out = Vec::new();
        for (n, coeff) in [(1i64, LaurentPoly::one()), (2, -LaurentPoly::one())] {
            let c = coeff.shift(-4 * m * n);
            for (i, j, p) in mul_b_parts(j1 + 1, j2 - 1) {
                out.push((i + n as u32, j, &c * &p));
            }
        }
        out
    }
}

impl Podles {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(0, 0)
    }

    /// `A^i B^j` for `j ≥ 0`, `A^i B*^{-j}` for `j < 0`.
    pub fn basis(i: u32, j: i32) -> Self {
        let mut x = Self::zero();
        x.add_term(i, j, RationalQ::one());
        x
    }

    pub fn gen_a() -> Self {
        Self::basis(1, 0)
    }

    pub fn gen_b() -> Self {
        Self::basis(0, 1)
    }

    pub fn gen_bs() -> Self {
        Self::basis(0, -1)
    }

    pub fn constant(c: RationalQ) -> Self {
        let mut x = Self::zero();
        x.add_term(0, 0, c);
        x
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i32), &RationalQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: i32) -> RationalQ {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(RationalQ::zero)
    }

    pub fn add_term(&mut self, i: u32, j: i32, c: RationalQ) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry((i, j)).or_insert_with(RationalQ::zero);
        *v = &*v + &c;
        if v.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut out = Self::zero();
        for ((i, j), v) in &self.terms {
            out.add_term(*i, *j, v * c);
        }
        out
    }

    /// Largest `i + |j|`.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                // X1 A^{i2} = q^{±2 i2 |j1|} A^{i2} X1
                let swap = LaurentPoly::q_pow(2 * *i2 as i64 * *j1 as i64);
                let c = c1 * c2;
                for (i, j, p) in mul_b_parts(*j1, *j2) {
                    let coeff = &c * &RationalQ::from_poly(&swap * &p);
                    out.add_term(i1 + i2 + i, j, coeff);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }

    /// `A* = A`, `B* ↔ B`; coefficients are real.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            // (A^i X)* = X* A^i = q^{∓2 i |j|} A^i X*
            let swap = RationalQ::q_pow(-2 * *i as i64 * *j as i64);
            out.add_term(*i, -*j, c * &swap);
        }
        out
    }

    /// Modular automorphism `σ(A) = A`, `σ(B) = q^2 B`, `σ(B*) = q^{-2} B*`.
    pub fn sigma(&self) -> Self {
        self.sigma_pow(1)
    }

    pub fn sigma_inverse(&self) -> Self {
        self.sigma_pow(-1)
    }

    pub fn sigma_pow(&self, n: i64) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(*i, *j, c * &RationalQ::q_pow(2 * n * *j as i64));
        }
        out
    }

    /// Image in the coordinate algebra.
    pub fn embed(&self) -> Coord {
        let mut out = Coord::zero(&crate::qscalar::Exact);
        for ((i, j), c) in &self.terms {
            let (m, k) = embed_basis(*i, *j);
            out.add_term(m, c * &k);
        }
        out
    }

    /// Inverse of [`Podles::embed`] on its image.
    pub fn recognize(x: &Coord) -> Result<Self, AlgebraError> {
        x.require_hopf()?;
        let xk = act_right(x, &UqElement::k_pow(1))?;
        if xk != *x {
            return Err(AlgebraError::NotInSubalgebra("not invariant under the right action of K".into()));
        }
        let mut out = Self::zero();
        for (m, c) in x.terms() {
            // embedded basis monomials are a^j b^i c^{i+j} and b^{i+k} c^i d^k
            let key = if m.d == 0 && m.c >= m.b && m.c - m.b == m.a as i32 {
                (m.b as u32, m.a as i32)
            } else if m.a == 0 && m.b >= m.c && m.b - m.c == m.d as i32 {
                (m.c as u32, -(m.d as i32))
            } else {
                return Err(AlgebraError::NotInSubalgebra(format!("monomial {} outside the span", m)));
            };
            let (bm, k) = embed_basis(key.0, key.1);
            debug_assert_eq!(bm, *m);
            out.add_term(key.0, key.1, c / &k);
        }
        Ok(out)
    }
}

/// `embed(A^i B^j) = k * m` for a single monomial `m`.
fn embed_basis(i: u32, j: i32) -> (Mono, RationalQ) {
    let a = Coord::b().times(&Coord::c()).scale(&-RationalQ::q_pow(-1));
    let x = if j >= 0 {
        a.pow(i).times(&Coord::a().times(&Coord::c()).pow(j as u32))
    } else {
        let bs = Coord::d().times(&Coord::b()).scale(&RationalQ::from_int(-1));
        a.pow(i).times(&bs.pow((-j) as u32))
    };
    let mut it = x.terms();
    let (m, c) = it.next().expect("nonzero");
    assert!(it.next().is_none());
    (*m, c.clone())
}

impl fmt::Display for Podles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| {
                let mut m = Vec::new();
                match i {
                    0 => {}
                    1 => m.push("A".to_string()),
                    _ => m.push(format!("A^{}", i)),
                }
                match *j {
                    0 => {}
                    1 => m.push("B".into()),
                    -1 => m.push("Bs".into()),
                    j if j > 0 => m.push(format!("B^{}", j)),
                    j => m.push(format!("Bs^{}", -j)),
                }
                let ms = m.join("*");
                match (ms.is_empty(), c.is_one()) {
                    (true, _) => format!("({})", c),
                    (false, true) => ms,
                    (false, false) => format!("({})*{}", c, ms),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Podles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &Podles {
    type Output = Podles;
    fn add(self, rhs: &Podles) -> Podles {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl Sub for &Podles {
    type Output = Podles;
    fn sub(self, rhs: &Podles) -> Podles {
        self + &(-rhs)
    }
}

impl Neg for &Podles {
    type Output = Podles;
    fn neg(self) -> Podles {
        self.scale(&RationalQ::from_int(-1))
    }
}

impl Mul for &Podles {
    type Output = Podles;
    fn mul(self, rhs: &Podles) -> Podles {
        self.times(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Podles {
        Podles::gen_a()
    }
    fn b() -> Podles {
        Podles::gen_b()
    }
    fn bs() -> Podles {
        Podles::gen_bs()
    }
    fn q(n: i64) -> RationalQ {
        RationalQ::q_pow(n)
    }

    #[test]
    fn relations() {
        assert_eq!(&b() * &a(), (&a() * &b()).scale(&q(2)));
        assert_eq!(&a() * &bs(), (&bs() * &a()).scale(&q(2)));
        assert_eq!(&bs() * &b(), &a() - &a().pow(2));
        assert_eq!(&b() * &bs(), &a().scale(&q(2)) - &a().pow(2).scale(&q(4)));
    }

    #[test]
    fn embed_generators() {
        assert_eq!(a().embed(), Coord::b().times(&Coord::c()).scale(&-q(-1)));
        assert_eq!(b().embed(), Coord::a().times(&Coord::c()));
        assert_eq!(Podles::one().embed(), Coord::unit());
    }

    #[test]
    fn embed_respects_relations() {
        let lhs = bs().embed().times(&b().embed());
        assert_eq!(lhs, (&a() - &a().pow(2)).embed());
        let lhs = b().embed().times(&bs().embed());
        assert_eq!(lhs, (&a().scale(&q(2)) - &a().pow(2).scale(&q(4))).embed());
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(Podles::recognize(&a().embed()).unwrap(), a());
        assert!(matches!(Podles::recognize(&Coord::a()), Err(AlgebraError::NotInSubalgebra(_))));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(b().sigma(), b().scale(&q(2)));
        assert_eq!(bs().sigma(), bs().scale(&q(-2)));
        assert_eq!(a().pow(3).sigma(), a().pow(3));
        assert_eq!(b().sigma().sigma_inverse(), b());
    }

    #[test]
    fn star_matches_coordinate_star() {
        for x in [a(), b(), bs(), &a() * &b(), &bs().pow(2) * &a()] {
            assert_eq!(x.star().embed(), x.embed().star().unwrap());
        }
    }
}
