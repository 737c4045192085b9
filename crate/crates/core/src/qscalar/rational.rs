use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational};

use super::laurent::{poly_div_exact, poly_gcd, LaurentPoly};
use super::ScalarError;

/// Element of the field `Q(q^{1/2})`, kept as a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator has lowest exponent 0 and leading coefficient 1,
/// and numerator and denominator are coprime. Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalQ {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    /// `q^n`.
    pub fn q_pow(n: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(n))
    }

    /// `q^{h/2}`.
    pub fn q_half_pow(h: i64) -> Self {
        Self::from_poly(LaurentPoly::q_half_pow(h))
    }

    /// `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `lambda = q - q^{-1}`.
    pub fn lambda() -> Self {
        Self::from_poly(LaurentPoly::from_terms([(2, 1), (-2, -1)]))
    }

    /// Builds `num/den` and brings it into canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Canonical form of an arbitrary fraction; `den` must be nonzero.
    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = den.as_monomial() {
            let inv = c.recip();
            return Self { num: num.scale(&inv).shift(-e), den: LaurentPoly::one() };
        }
        let (nlo, dlo) = (num.min_exp().unwrap(), den.min_exp().unwrap());
        let stride = num
            .terms()
            .map(|(e, _)| e - nlo)
            .chain(den.terms().map(|(e, _)| e - dlo))
            .fold(0, num::integer::gcd)
            .max(1);
        let nd = num.to_dense_stride(nlo, stride);
        let dd = den.to_dense_stride(dlo, stride);
        let g = poly_gcd(&nd, &dd);
        let (nd, dd) = if g.len() > 1 {
            (poly_div_exact(&nd, &g), poly_div_exact(&dd, &g))
        } else {
            (nd, dd)
        };
        let lead = dd.last().unwrap().clone();
        let inv = lead.recip();
        let nd: Vec<BigRational> = nd.iter().map(|c| c * &inv).collect();
        let dd: Vec<BigRational> = dd.iter().map(|c| c * &inv).collect();
        // numerator carries the relative t-power; denominator starts at t^0
        let num = LaurentPoly::from_dense_stride(nlo - dlo, stride, &nd);
        let den = LaurentPoly::from_dense_stride(0, stride, &dd);
        Self { num, den }
    }

    /// Re-normalizes; idempotent on canonical values.
    pub fn normalize(&self) -> Result<Self, ScalarError> {
        Self::new(self.num.clone(), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self::reduce(self.num.invert_variable(), self.den.invert_variable())
    }

    /// True when only integer powers of `q` occur.
    pub fn is_integral_in_q(&self) -> bool {
        self.num.is_integral_in_q() && self.den.is_integral_in_q()
    }

    /// Numeric value at `q = q0` for `0 < q0 < 1`.
    pub fn eval(&self, q0: f64) -> Result<f64, ScalarError> {
        if !(q0 > 0.0 && q0 < 1.0) {
            return Err(ScalarError::BadParameter(format!("q0 = {q0} outside (0,1)")));
        }
        let d = self.den.eval_f64(q0);
        if d == 0.0 {
            return Err(ScalarError::EvaluationPole(q0.to_string()));
        }
        Ok(self.num.eval_f64(q0) / d)
    }

    /// Exact value at a rational `q0`, in `Q(sqrt(q0))`.
    pub fn eval_exact(&self, q0: &BigRational) -> Result<super::Surd, ScalarError> {
        let ctx = super::SurdCtx::new(q0.clone())?;
        let d = ctx.eval_poly(&self.den);
        if d.is_zero() {
            return Err(ScalarError::EvaluationPole(q0.to_string()));
        }
        let n = ctx.eval_poly(&self.num);
        Ok(n.mul(&d.inv().expect("nonzero")))
    }

    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        super::text::parse_rational(text)
    }
}

impl Default for RationalQ {
    fn default() -> Self {
        Self::zero()
    }
}

/// `[n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}`, with `[-n]_q = -[n]_q`.
pub fn qint(n: i64) -> RationalQ {
    let m = n.abs();
    let mut p = LaurentPoly::zero();
    let sign = if n < 0 { -1 } else { 1 };
    for i in 0..m {
        p.add_term(2 * (m - 1 - 2 * i), BigRational::from_integer(BigInt::from(sign)));
    }
    RationalQ::from_poly(p)
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})/({})", self.num, self.den)
        } else {
            write!(f, "{}/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// ---- Add ----

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalQ::from_poly(&self.num + &rhs.num);
            }
            return RationalQ::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalQ::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: RationalQ) -> RationalQ {
        &self + &rhs
    }
}

// ---- Sub ----

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Sub for RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: RationalQ) -> RationalQ {
        &self - &rhs
    }
}

// ---- Mul ----

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalQ::from_poly(&self.num * &rhs.num);
        }
        RationalQ::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: RationalQ) -> RationalQ {
        &self * &rhs
    }
}

// ---- Div ----

impl Div for &RationalQ {
    type Output = RationalQ;
    /// Panics on division by zero; use [`RationalQ::inv`] for a checked version.
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self * &rhs.inv().expect("division by zero in Q(q)")
    }
}

impl Div for RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: RationalQ) -> RationalQ {
        &self / &rhs
    }
}

// ---- Neg ----

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

impl From<i64> for RationalQ {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<LaurentPoly> for RationalQ {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (q^2 - 1)/(q - 1) = q + 1
        let x = RationalQ::new(lp(&[(4, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(x, RationalQ::from_poly(lp(&[(2, 1), (0, 1)])));
    }

    #[test]
    fn zero_over_monomial() {
        let x = RationalQ::new(LaurentPoly::zero(), lp(&[(6, 1)])).unwrap();
        assert!(x.is_zero());
        assert_eq!(x, RationalQ::zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalQ::new(LaurentPoly::one(), LaurentPoly::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn lambda_times_qint() {
        for n in 1..=6 {
            let lhs = &RationalQ::lambda() * &qint(n);
            let rhs = &RationalQ::q_pow(n) - &RationalQ::q_pow(-n);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(2), &RationalQ::q() + &RationalQ::q_pow(-1));
        assert_eq!(qint(-3), -qint(3));
        assert!((qint(3).eval(0.5).unwrap() - 5.25).abs() < 1e-15);
    }

    #[test]
    fn eval_examples() {
        assert!((qint(2).eval(0.5).unwrap() - 2.5).abs() < 1e-15);
        assert!((RationalQ::lambda().eval(0.5).unwrap() + 1.5).abs() < 1e-15);
        let one = RationalQ::one();
        let h_a = (&one - &RationalQ::q_pow(2)) / (&one - &RationalQ::q_pow(4));
        assert!((h_a.eval(0.5).unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn canonical_equality_of_equal_fractions() {
        let one = RationalQ::one();
        let a = (&one - &RationalQ::q_pow(2)) / (&one - &RationalQ::q_pow(4));
        let b = one.clone() / (&one + &RationalQ::q_pow(2));
        assert_eq!(a, b);
    }
}
