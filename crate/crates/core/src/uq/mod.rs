//! The quantized enveloping algebra with generators `E, F, K, K^{-1}`:
//! `KE = qEK`, `FK = qKF`, `EF - FE = λ^{-1}(K^2 - K^{-2})`, PBW basis `F^f K^k E^e`.

mod action;
mod pairing;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use action::{act_left, act_right, r_action, Gen};
pub use pairing::pair;

use crate::qscalar::{qint, RationalQ};

/// PBW monomial `F^f K^k E^e`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UqMono {
    pub f: u32,
    pub k: i32,
    pub e: u32,
}

impl UqMono {
    pub const ONE: UqMono = UqMono { f: 0, k: 0, e: 0 };

    pub fn new(f: u32, k: i32, e: u32) -> Self {
        Self { f, k, e }
    }
}

impl fmt::Display for UqMono {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == UqMono::ONE {
            return write!(fm, "1");
        }
        let mut parts = Vec::new();
        for (name, e) in [("F", self.f as i32), ("K", self.k), ("E", self.e as i32)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{}^{}", name, e)),
            }
        }
        write!(fm, "{}", parts.join("*"))
    }
}

impl fmt::Debug for UqMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of the enveloping algebra in PBW normal form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UqElement {
    terms: BTreeMap<UqMono, RationalQ>,
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(UqMono::ONE, RationalQ::one())
    }

    pub fn monomial(m: UqMono, c: RationalQ) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn e() -> Self {
        Self::monomial(UqMono::new(0, 0, 1), RationalQ::one())
    }

    pub fn f() -> Self {
        Self::monomial(UqMono::new(1, 0, 0), RationalQ::one())
    }

    /// `K^n`.
    pub fn k_pow(n: i32) -> Self {
        Self::monomial(UqMono::new(0, n, 0), RationalQ::one())
    }

    pub fn scalar(c: RationalQ) -> Self {
        Self::monomial(UqMono::ONE, c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqMono, &RationalQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: UqMono, c: RationalQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    /// Right multiplication of a single PBW monomial by one generator.
    fn mono_times_gen(m: &UqMono, g: Gen, out: &mut Self, c: &RationalQ) {
        match g {
            Gen::E => out.add_term(UqMono::new(m.f, m.k, m.e + 1), c.clone()),
            Gen::K(j) => {
                // E^e K^j = q^{-ej} K^j E^e
                let coeff = c * &RationalQ::q_pow(-(m.e as i64) * j as i64);
                out.add_term(UqMono::new(m.f, m.k + j, m.e), coeff);
            }
            Gen::F => {
                // K^k F = q^{-k} F K^k
                out.add_term(UqMono::new(m.f + 1, m.k, m.e), c * &RationalQ::q_pow(-(m.k as i64)));
                if m.e > 0 {
                    // E^e F - F E^e = λ^{-1}(Σ_s q^{-2s}) K^2 E^{e-1} - λ^{-1}(Σ_s q^{2s}) K^{-2} E^{e-1}
                    let e = m.e as i64;
                    let linv = RationalQ::lambda().inv().expect("λ ≠ 0");
                    let mut plus = RationalQ::zero();
                    let mut minus = RationalQ::zero();
                    for s in 0..e {
                        plus = &plus + &RationalQ::q_pow(-2 * s);
                        minus = &minus + &RationalQ::q_pow(2 * s);
                    }
                    let base = c * &linv;
                    out.add_term(UqMono::new(m.f, m.k + 2, m.e - 1), &base * &plus);
                    out.add_term(UqMono::new(m.f, m.k - 2, m.e - 1), -(&base * &minus));
                }
            }
        }
    }

    fn times_gen(&self, g: Gen) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            Self::mono_times_gen(m, g, &mut out, c);
        }
        out
    }

    /// Generator word of a PBW monomial, left to right.
    pub(crate) fn word(m: &UqMono) -> Vec<Gen> {
        let mut w = vec![Gen::F; m.f as usize];
        if m.k != 0 {
            w.push(Gen::K(m.k));
        }
        w.extend(std::iter::repeat_n(Gen::E, m.e as usize));
        w
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &other.terms {
            let mut acc = self.scale(c);
            for g in Self::word(m) {
                acc = acc.times_gen(g);
            }
            out = &out + &acc;
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

    pub fn counit(&self) -> RationalQ {
        let mut acc = RationalQ::zero();
        for (m, c) in &self.terms {
            if m.f == 0 && m.e == 0 {
                acc = &acc + c;
            }
        }
        acc
    }

    /// Image of a generator under the antipode.
    fn antipode_gen(g: Gen) -> Self {
        match g {
            Gen::E => Self::e().scale(&-RationalQ::q()),
            Gen::F => Self::f().scale(&-RationalQ::q_pow(-1)),
            Gen::K(j) => Self::k_pow(-j),
        }
    }

    /// Inverse antipode on a generator, found by inverting `S` on the one-dimensional
    /// span it preserves.
    fn antipode_inv_gen(g: Gen) -> Self {
        let s = Self::antipode_gen(g);
        let (m, c) = s.terms.iter().next().expect("nonzero image");
        assert_eq!(s.terms.len(), 1);
        let target = match g {
            Gen::E => UqMono::new(0, 0, 1),
            Gen::F => UqMono::new(1, 0, 0),
            Gen::K(j) => UqMono::new(0, j, 0),
        };
        let out = if *m == target {
            Self::monomial(target, c.inv().expect("invertible"))
        } else {
            // S(K^j) = K^{-j}, so S^{-1}(K^j) = K^{-j} as well
            Self::monomial(*m, c.inv().expect("invertible"))
        };
        debug_assert_eq!(out.antipode_with(Self::antipode_gen), Self::from_gen(g));
        out
    }

    pub(crate) fn from_gen(g: Gen) -> Self {
        match g {
            Gen::E => Self::e(),
            Gen::F => Self::f(),
            Gen::K(j) => Self::k_pow(j),
        }
    }

    fn antipode_with(&self, on_gen: fn(Gen) -> Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // anti-multiplicative: reverse the word
            let mut acc = Self::scalar(c.clone());
            for g in Self::word(m).into_iter().rev() {
                acc = acc.times(&on_gen(g));
            }
            out = &out + &acc;
        }
        out
    }

    /// `S(f)`, or `S^{-1}(f)` when `inverse` is set.
    pub fn antipode(&self, inverse: bool) -> Self {
        if inverse {
            self.antipode_with(Self::antipode_inv_gen)
        } else {
            self.antipode_with(Self::antipode_gen)
        }
    }

    /// `E* = F`, `K* = K`; coefficients are real.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(UqMono::new(m.e, m.k, m.f), c.clone());
        }
        out
    }

    /// Iterated coproduct into `n` tensor factors.
    pub fn coproduct(&self, n: usize) -> UqTensor {
        assert!(n >= 1);
        let mut out = UqTensor::zero(n);
        for (m, c) in &self.terms {
            let mut acc = UqTensor::one(n);
            for g in Self::word(m) {
                acc = acc.mul(&UqTensor::gen_coproduct(g, n));
            }
            out = out.add(&acc.scale(c));
        }
        out
    }
}

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if c.is_one() { m.to_string() } else { format!("({})*{}", c, m) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &UqElement {
    type Output = UqElement;
    fn add(self, rhs: &UqElement) -> UqElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &UqElement {
    type Output = UqElement;
    fn sub(self, rhs: &UqElement) -> UqElement {
        self + &(-rhs)
    }
}

impl Neg for &UqElement {
    type Output = UqElement;
    fn neg(self) -> UqElement {
        self.scale(&RationalQ::from_int(-1))
    }
}

impl Mul for &UqElement {
    type Output = UqElement;
    fn mul(self, rhs: &UqElement) -> UqElement {
        self.times(rhs)
    }
}

/// Element of a tensor power of the enveloping algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UqTensor {
    arity: usize,
    terms: BTreeMap<Vec<UqMono>, RationalQ>,
}

impl UqTensor {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![UqMono::ONE; arity], RationalQ::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<UqMono>, &RationalQ)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<UqMono>, c: RationalQ) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(key.clone()).or_insert_with(RationalQ::zero);
        *v = &*v + &c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn from_factors(factors: &[UqElement]) -> Self {
        let mut t = Self::one(0);
        for f in factors {
            let mut next = Self::zero(t.arity + 1);
            for (k, c) in &t.terms {
                for (m, v) in f.terms() {
                    let mut key = k.clone();
                    key.push(*m);
                    next.add_term(key, c * v);
                }
            }
            t = next;
        }
        t
    }

    fn gen_coproduct(g: Gen, n: usize) -> Self {
        let mut out = Self::zero(n);
        match g {
            Gen::K(j) => out.add_term(vec![UqMono::new(0, j, 0); n], RationalQ::one()),
            Gen::E | Gen::F => {
                let gm = if g == Gen::E { UqMono::new(0, 0, 1) } else { UqMono::new(1, 0, 0) };
                for t in 0..n {
                    let key = (0..n)
                        .map(|s| match s.cmp(&t) {
                            std::cmp::Ordering::Less => UqMono::new(0, -1, 0),
                            std::cmp::Ordering::Equal => gm,
                            std::cmp::Ordering::Greater => UqMono::new(0, 1, 0),
                        })
                        .collect();
                    out.add_term(key, RationalQ::one());
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut partial = vec![(Vec::new(), c1 * c2)];
                for (m1, m2) in k1.iter().zip(k2) {
                    let prod = UqElement::monomial(*m1, RationalQ::one())
                        .times(&UqElement::monomial(*m2, RationalQ::one()));
                    let mut next = Vec::new();
                    for (key, c) in &partial {
                        for (m, v) in prod.terms() {
                            let mut nk: Vec<UqMono> = key.clone();
                            nk.push(*m);
                            next.push((nk, c * v));
                        }
                    }
                    partial = next;
                }
                for (key, c) in partial {
                    out.add_term(key, c);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut out = Self::zero(self.arity);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

/// `(α^l_j)^2 = [l-j][l+j+1]` for doubled labels `l2 = 2l`, `j2 = 2j`.
pub fn alpha_sq(l2: i64, j2: i64) -> RationalQ {
    debug_assert!((l2 - j2) % 2 == 0);
    &qint((l2 - j2) / 2) * &qint((l2 + j2) / 2 + 1)
}
