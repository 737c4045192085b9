use std::fmt;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, ToPrimitive};
use rug::ops::Pow;
use rug::{Integer, Rational};

use super::laurent::LaurentPoly;
use super::{RationalQ, ScalarError};

type PowCache = Arc<RwLock<HashMap<i64, Rational>>>;
type PolyCache = Arc<RwLock<HashMap<LaurentPoly, Surd>>>;

/// Evaluation context for [`Surd`]: a fixed rational `q0` in `(0,1)`.
#[derive(Clone, Debug)]
pub struct SurdCtx {
    q0: Arc<BigRational>,
    q0g: Arc<Rational>,
    // rational square root of q0 when it exists; then every value has b = 0
    root: Option<Rational>,
    powers: PowCache,
    polys: PolyCache,
}

impl PartialEq for SurdCtx {
    fn eq(&self, other: &Self) -> bool {
        self.q0 == other.q0
    }
}

impl SurdCtx {
    pub fn new(q0: BigRational) -> Result<Self, ScalarError> {
        if !(q0.is_positive() && q0 < BigRational::one()) {
            return Err(ScalarError::BadParameter(format!("q0 = {q0} outside (0,1)")));
        }
        let root = rational_sqrt(&q0);
        let q0g = Arc::new(to_gmp(&q0));
        Ok(Self { q0: Arc::new(q0), q0g, root: root.map(|r| to_gmp(&r)), powers: Arc::default(), polys: Arc::default() })
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0
    }

    pub fn q0_f64(&self) -> f64 {
        self.q0.to_f64().unwrap_or(f64::NAN)
    }

    /// `base^n` where the base is `sqrt(q0)` when rational, else `q0`.
    fn base_pow(&self, n: i64) -> Rational {
        if let Some(v) = self.powers.read().unwrap().get(&n) {
            return v.clone();
        }
        let base = self.root.as_ref().unwrap_or(&self.q0g);
        let v = pow_rational(base, n);
        self.powers.write().unwrap().insert(n, v.clone());
        v
    }

    /// `t^h` with `t = sqrt(q0)`.
    pub fn t_pow(&self, h: i64) -> Surd {
        let q0 = Some(self.q0g.clone());
        if self.root.is_some() {
            return Surd { a: self.base_pow(h), b: Rational::new(), q0 };
        }
        let base = self.base_pow(h.div_euclid(2));
        if h.rem_euclid(2) == 1 {
            Surd { a: Rational::new(), b: base, q0 }
        } else {
            Surd { a: base, b: Rational::new(), q0 }
        }
    }

    pub fn eval_poly(&self, p: &LaurentPoly) -> Surd {
        if p.len() <= 2 {
            return self.eval_poly_direct(p);
        }
        if let Some(v) = self.polys.read().unwrap().get(p) {
            return v.clone();
        }
        let v = self.eval_poly_direct(p);
        self.polys.write().unwrap().insert(p.clone(), v.clone());
        v
    }

    fn eval_poly_direct(&self, p: &LaurentPoly) -> Surd {
        let mut a = Rational::new();
        let mut b = Rational::new();
        for (h, c) in p.terms() {
            let c = coeff_to_gmp(c);
            if self.root.is_some() {
                a += c * self.base_pow(h);
            } else if h.rem_euclid(2) == 1 {
                b += c * self.base_pow(h.div_euclid(2));
            } else {
                a += c * self.base_pow(h.div_euclid(2));
            }
        }
        Surd { a, b, q0: Some(self.q0g.clone()) }
    }

    pub fn eval(&self, x: &RationalQ) -> Result<Surd, ScalarError> {
        let d = self.eval_poly(x.denom());
        let dinv = d.inv().ok_or_else(|| ScalarError::EvaluationPole(self.q0.to_string()))?;
        Ok(self.eval_poly(x.numer()).mul(&dinv))
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

fn pow_rational(x: &Rational, n: i64) -> Rational {
    let base = if n < 0 { x.clone().recip() } else { x.clone() };
    let e = u32::try_from(n.unsigned_abs()).expect("exponent fits u32");
    base.pow(e)
}

fn coeff_to_gmp(c: &BigRational) -> Rational {
    match (c.numer().to_i64(), c.denom().to_i64()) {
        (Some(n), Some(1)) => Rational::from(n),
        (Some(n), Some(d)) => Rational::from((n, d)),
        _ => to_gmp(c),
    }
}

pub(crate) fn to_gmp(x: &BigRational) -> Rational {
    let n = Integer::from_str_radix(&x.numer().to_str_radix(16), 16).expect("hex digits");
    let d = Integer::from_str_radix(&x.denom().to_str_radix(16), 16).expect("hex digits");
    Rational::from((n, d))
}

fn from_gmp(x: &Rational) -> BigRational {
    let n = BigInt::parse_bytes(x.numer().to_string_radix(16).as_bytes(), 16).expect("hex digits");
    let d = BigInt::parse_bytes(x.denom().to_string_radix(16).as_bytes(), 16).expect("hex digits");
    BigRational::new(n, d)
}

/// Exact number `a + b*sqrt(q0)` with rational `a`, `b`.
///
/// Used to run the algebra at a concrete rational deformation parameter without
/// rounding. `q0` is absent on context-free constants such as 0 and 1.
/// Arithmetic runs on GMP rationals.
#[derive(Clone)]
pub struct Surd {
    a: Rational,
    b: Rational,
    q0: Option<Arc<Rational>>,
}

impl Surd {
    pub fn zero() -> Self {
        Self { a: Rational::new(), b: Rational::new(), q0: None }
    }

    pub fn one() -> Self {
        Self { a: Rational::from(1), b: Rational::new(), q0: None }
    }

    pub fn rational(a: BigRational) -> Self {
        Self { a: to_gmp(&a), b: Rational::new(), q0: None }
    }

    /// Rational parts `(a, b)` of `a + b*sqrt(q0)`.
    pub fn parts(&self) -> (BigRational, BigRational) {
        (from_gmp(&self.a), from_gmp(&self.b))
    }

    pub fn is_zero(&self) -> bool {
        self.a.cmp0() == Ordering::Equal && self.b.cmp0() == Ordering::Equal
    }

    fn ctx(&self, other: &Self) -> Option<Arc<Rational>> {
        self.q0.clone().or_else(|| other.q0.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { a: Rational::from(&self.a + &o.a), b: Rational::from(&self.b + &o.b), q0: self.ctx(o) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { a: Rational::from(&self.a - &o.a), b: Rational::from(&self.b - &o.b), q0: self.ctx(o) }
    }

    pub fn neg(&self) -> Self {
        Self { a: Rational::from(-&self.a), b: Rational::from(-&self.b), q0: self.q0.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let q0 = self.ctx(o);
        let sb = self.b.cmp0() != Ordering::Equal;
        let ob = o.b.cmp0() != Ordering::Equal;
        let mut a = Rational::from(&self.a * &o.a);
        if sb && ob {
            let q = q0.as_ref().expect("surd product without q0");
            a += Rational::from(&self.b * &o.b) * q.as_ref();
        }
        let b = match (sb, ob) {
            (false, false) => Rational::new(),
            (true, false) => Rational::from(&self.b * &o.a),
            (false, true) => Rational::from(&self.a * &o.b),
            (true, true) => Rational::from(&self.a * &o.b) + Rational::from(&self.b * &o.a),
        };
        Self { a, b, q0 }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.cmp0() == Ordering::Equal {
            return Some(Self { a: self.a.clone().recip(), b: Rational::new(), q0: self.q0.clone() });
        }
        let q = self.q0.as_ref().expect("surd without q0");
        // (a + b t)^{-1} = (a - b t)/(a^2 - b^2 q0); q0 is not a square whenever b != 0
        let norm = Rational::from(&self.a * &self.a) - Rational::from(&self.b * &self.b) * q.as_ref();
        if norm.cmp0() == Ordering::Equal {
            return None;
        }
        let a = Rational::from(&self.a / &norm);
        let b = -Rational::from(&self.b / &norm);
        Some(Self { a, b, q0: self.q0.clone() })
    }

    pub fn to_f64(&self) -> f64 {
        if self.b.cmp0() == Ordering::Equal {
            return self.a.to_f64();
        }
        let q = self.q0.as_ref().map(|q| q.to_f64()).unwrap_or(f64::NAN);
        let (a, bt) = (self.a.to_f64(), self.b.to_f64() * q.sqrt());
        if self.a.cmp0() == self.b.cmp0() {
            return a + bt;
        }
        // opposite signs: use (a^2 - b^2 q0)/(a - b t) to avoid cancellation
        let q0 = self.q0.as_ref().expect("surd without q0");
        let norm = Rational::from(&self.a * &self.a) - Rational::from(&self.b * &self.b) * q0.as_ref();
        norm.to_f64() / (a - bt)
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.cmp0() == Ordering::Equal {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt(q0)", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn half() -> SurdCtx {
        SurdCtx::new(BigRational::new(BigInt::from(1), BigInt::from(2))).unwrap()
    }

    #[test]
    fn t_squared_is_q0() {
        let ctx = half();
        let t = ctx.t_pow(1);
        assert_eq!(t.mul(&t), ctx.t_pow(2));
        assert_eq!(&ctx.t_pow(2).parts().0, ctx.q0());
    }

    #[test]
    fn inverse_roundtrip() {
        let ctx = half();
        let x = Surd::one().add(&ctx.t_pow(1)).add(&ctx.t_pow(-3));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), Surd::one());
    }

    #[test]
    fn square_q0_stays_rational() {
        let ctx = SurdCtx::new(BigRational::new(BigInt::from(1), BigInt::from(4))).unwrap();
        let x = ctx.t_pow(1).sub(&Surd::rational(BigRational::new(BigInt::from(1), BigInt::from(2))));
        assert!(x.is_zero());
    }

    #[test]
    fn matches_float_eval() {
        let ctx = half();
        let x = super::super::qint(3);
        assert!((ctx.eval(&x).unwrap().to_f64() - 5.25).abs() < 1e-15);
    }
}
