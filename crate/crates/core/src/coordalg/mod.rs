//! The coordinate algebra of quantum SU(2) with generators `a, b, c, d`, and its
//! localization at `b` and `c`.
//!
//! Relations: `ab = q ba`, `ac = q ca`, `bc = cb`, `bd = q db`, `cd = q dc`,
//! `ad = 1 + q bc`, `da = 1 + q^{-1} bc`. Normal monomials are `a^i b^j c^k d^l`
//! with `i*l = 0`.

mod hopf;
mod monomial;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use hopf::TensorElement;
pub use monomial::{mono_mul, Mono};

use crate::qscalar::{Exact, LaurentPoly, RationalQ, Scalar};

/// Element of the coordinate algebra with coefficients in `S`.
#[derive(Clone)]
pub struct CoordElement<S: Scalar = RationalQ> {
    terms: BTreeMap<Mono, S>,
    localized: bool,
    ctx: S::Ctx,
}

/// Symbolic coordinate element.
pub type Coord = CoordElement<RationalQ>;

impl<S: Scalar> CoordElement<S> {
    pub fn zero(ctx: &S::Ctx) -> Self {
        Self { terms: BTreeMap::new(), localized: false, ctx: ctx.clone() }
    }

    pub fn one(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::ONE, S::one(), ctx)
    }

    pub fn scalar(c: S, ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::ONE, c, ctx)
    }

    pub fn monomial(m: Mono, c: S, ctx: &S::Ctx) -> Self {
        let mut e = Self::zero(ctx);
        e.localized = m.is_localized();
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn gen_a(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::new(1, 0, 0, 0), S::one(), ctx)
    }
    pub fn gen_b(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::new(0, 1, 0, 0), S::one(), ctx)
    }
    pub fn gen_c(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::new(0, 0, 1, 0), S::one(), ctx)
    }
    pub fn gen_d(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::new(0, 0, 0, 1), S::one(), ctx)
    }
    /// `b^{-1}` in the localized algebra.
    pub fn gen_binv(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::new(0, -1, 0, 0), S::one(), ctx)
    }
    /// `c^{-1}` in the localized algebra.
    pub fn gen_cinv(ctx: &S::Ctx) -> Self {
        Self::monomial(Mono::new(0, 0, -1, 0), S::one(), ctx)
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn is_localized(&self) -> bool {
        self.localized
    }

    /// Same element viewed in the localized algebra.
    pub fn localize(&self) -> Self {
        let mut e = self.clone();
        e.localized = true;
        e
    }

    /// Fails with `NotInHopfDomain` when a negative power of `b` or `c` occurs.
    pub fn require_hopf(&self) -> Result<(), crate::AlgebraError> {
        if self.terms.keys().any(|m| m.is_localized()) {
            Err(crate::AlgebraError::NotInHopfDomain)
        } else {
            Ok(())
        }
    }

    /// Drops the localized flag when no inverse occurs.
    pub fn delocalize(&self) -> Result<Self, crate::AlgebraError> {
        self.require_hopf()?;
        let mut e = self.clone();
        e.localized = false;
        Ok(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: S) {
        if c.is_zero() {
            return;
        }
        if m.is_localized() {
            self.localized = true;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(&self.ctx);
        out.localized = self.localized;
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(*m, v.times(c));
        }
        out
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        self.scale(&S::from_poly(p, &self.ctx))
    }

    /// `q^{h/2} * self`.
    pub fn scale_q_half(&self, h: i64) -> Self {
        self.scale_poly(&LaurentPoly::q_half_pow(h))
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ctx);
        out.localized = self.localized || other.localized;
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.times(c2);
                for (m, p) in mono_mul(m1, m2) {
                    out.add_term(m, c.times(&S::from_poly(&p, &self.ctx)));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        acc.localized = self.localized;
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }

    /// Applies `f` to every monomial and sums the results with the coefficients.
    pub fn map_monomials<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Mono) -> Self,
    {
        let mut out = Self::zero(&self.ctx);
        out.localized = self.localized;
        for (m, c) in &self.terms {
            let img = f(m);
            for (m2, c2) in img.terms {
                out.add_term(m2, c.times(&c2));
            }
        }
        out
    }

    /// Largest total degree `i + |j| + |k| + l` of a monomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }
}

impl Coord {
    pub fn from_mono(m: Mono) -> Self {
        Self::monomial(m, RationalQ::one(), &Exact)
    }

    pub fn a() -> Self {
        Self::gen_a(&Exact)
    }
    pub fn b() -> Self {
        Self::gen_b(&Exact)
    }
    pub fn c() -> Self {
        Self::gen_c(&Exact)
    }
    pub fn d() -> Self {
        Self::gen_d(&Exact)
    }
    pub fn unit() -> Self {
        Self::one(&Exact)
    }
    pub fn constant(c: RationalQ) -> Self {
        Self::scalar(c, &Exact)
    }

    /// Coefficients mapped into another scalar ring.
    pub fn convert<T: Scalar>(&self, ctx: &T::Ctx) -> Result<CoordElement<T>, crate::qscalar::ScalarError> {
        let mut out = CoordElement::<T>::zero(ctx);
        out.localized = self.localized;
        for (m, c) in &self.terms {
            out.add_term(*m, T::from_rq(c, ctx)?);
        }
        Ok(out)
    }
}

/// Equality of elements; the localized flag is not compared.
impl<S: Scalar> PartialEq for CoordElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<S: Scalar> fmt::Debug for CoordElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({:?})*{}", c, m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *m == Mono::ONE {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "({})*{}", c, m)?;
            }
        }
        Ok(())
    }
}

// ---- arithmetic ----

impl<S: Scalar> Add for &CoordElement<S> {
    type Output = CoordElement<S>;
    fn add(self, rhs: &CoordElement<S>) -> CoordElement<S> {
        let mut out = self.clone();
        out.localized |= rhs.localized;
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &CoordElement<S> {
    type Output = CoordElement<S>;
    fn sub(self, rhs: &CoordElement<S>) -> CoordElement<S> {
        let mut out = self.clone();
        out.localized |= rhs.localized;
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.negate());
        }
        out
    }
}

impl<S: Scalar> Mul for &CoordElement<S> {
    type Output = CoordElement<S>;
    fn mul(self, rhs: &CoordElement<S>) -> CoordElement<S> {
        self.times(rhs)
    }
}

impl<S: Scalar> Neg for &CoordElement<S> {
    type Output = CoordElement<S>;
    fn neg(self) -> CoordElement<S> {
        self.scale(&S::one().negate())
    }
}

impl<S: Scalar> Add for CoordElement<S> {
    type Output = CoordElement<S>;
    fn add(self, rhs: CoordElement<S>) -> CoordElement<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for CoordElement<S> {
    type Output = CoordElement<S>;
    fn sub(self, rhs: CoordElement<S>) -> CoordElement<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for CoordElement<S> {
    type Output = CoordElement<S>;
    fn mul(self, rhs: CoordElement<S>) -> CoordElement<S> {
        self.times(&rhs)
    }
}

impl<S: Scalar> Neg for CoordElement<S> {
    type Output = CoordElement<S>;
    fn neg(self) -> CoordElement<S> {
        -&self
    }
}
