use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Laurent polynomial in `t = q^{1/2}`.
///
/// The key of `coeffs` is the exponent of `t`, so `q^n` is stored at key `2n`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * t^half_exp`.
    pub fn monomial(c: BigRational, half_exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(half_exp, c);
        }
        Self { coeffs }
    }

    /// `q^n` for integer `n`.
    pub fn q_pow(n: i64) -> Self {
        Self::monomial(BigRational::one(), 2 * n)
    }

    /// `q^{h/2}`.
    pub fn q_half_pow(h: i64) -> Self {
        Self::monomial(BigRational::one(), h)
    }

    /// Builds from `(half_exp, integer coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn add_term(&mut self, half_exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(half_exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&half_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, half_exp: i64) -> BigRational {
        self.coeffs.get(&half_exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The single term if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.values().next_back()
    }

    /// Multiplies by `t^h`.
    pub fn shift(&self, h: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + h, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// True when every exponent is even, i.e. the polynomial lies in `Q[q, q^{-1}]`.
    pub fn is_integral_in_q(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Substitutes `q -> q^{-1}` (so `t -> t^{-1}`).
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Dense coefficients of `(p / t^lo)` as a polynomial in `t^stride`.
    pub(crate) fn to_dense_stride(&self, lo: i64, stride: i64) -> Vec<BigRational> {
        let hi = self.max_exp().unwrap_or(lo);
        let mut v = vec![BigRational::zero(); ((hi - lo) / stride + 1) as usize];
        for (e, c) in &self.coeffs {
            v[((e - lo) / stride) as usize] = c.clone();
        }
        v
    }

    pub(crate) fn from_dense_stride(lo: i64, stride: i64, v: &[BigRational]) -> Self {
        let mut p = Self::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p.coeffs.insert(lo + stride * i as i64, c.clone());
            }
        }
        p
    }

    /// Evaluation at `q = q0`.
    pub fn eval_f64(&self, q0: f64) -> f64 {
        let t0 = q0.sqrt();
        self.coeffs
            .iter()
            .map(|(e, c)| {
                let p = if e % 2 == 0 { q0.powi((e / 2) as i32) } else { t0.powi(*e as i32) };
                num::ToPrimitive::to_f64(c).unwrap_or(f64::NAN) * p
            })
            .sum()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Writes `q^{h/2}` with the conventions used by the text format.
pub(crate) fn write_q_power(out: &mut String, h: i64) {
    if h == 0 {
        return;
    }
    if h % 2 == 0 {
        let n = h / 2;
        if n == 1 {
            out.push('q');
        } else {
            out.push_str(&format!("q^{}", n));
        }
    } else {
        out.push_str(&format!("q^({}/2)", h));
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if *e == 0 {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                write_q_power(&mut out, *e);
            }
        }
        f.write_str(&out)
    }
}

// ---- arithmetic ----

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if let Some((e, c)) = rhs.as_monomial() {
            return self.scale(c).shift(e);
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.scale(c).shift(e);
        }
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// ---- dense polynomial helpers over Q ----

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of `a` by `b` (both dense, lowest degree first, `b` nonzero).
fn poly_rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    trim(&mut a);
    let db = b.len() - 1;
    let lead = &b[db];
    while a.len() > db && !a.is_empty() {
        let shift = a.len() - 1 - db;
        let factor = a.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            a[shift + i] -= t;
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Quotient of exact division `a / b`; panics in debug builds if inexact.
pub(crate) fn poly_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = a.to_vec();
    trim(&mut a);
    let db = b.len() - 1;
    let lead = &b[db];
    if a.len() < b.len() {
        debug_assert!(a.is_empty());
        return Vec::new();
    }
    let mut quot = vec![BigRational::zero(); a.len() - db];
    while a.len() > db && !a.is_empty() {
        let shift = a.len() - 1 - db;
        let factor = a.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            a[shift + i] -= t;
        }
        quot[shift] = factor;
        a.pop();
        trim(&mut a);
    }
    debug_assert!(a.is_empty(), "inexact polynomial division");
    quot
}

/// Monic gcd of two dense polynomials.
pub(crate) fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let mut r = poly_rem(x, &y);
        if let Some(l) = r.last().cloned() {
            for c in r.iter_mut() {
                *c = &*c / &l;
            }
        }
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &l;
        }
    }
    x
}
