//! Exact scalars: the field `Q(q^{1/2})`, q-integers, and exact evaluation at rational `q0`.

mod laurent;
mod rational;
mod surd;
mod text;

use std::fmt::Debug;

pub use laurent::LaurentPoly;
pub use rational::{qint, RationalQ};
pub use surd::{Surd, SurdCtx};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q0 = {0}")]
    EvaluationPole(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Coefficient ring for the algebra layers.
///
/// [`RationalQ`] keeps `q` symbolic; [`Surd`] fixes `q = q0` and stays exact.
pub trait Scalar: Clone + PartialEq + Debug + std::fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn recip(&self) -> Option<Self>;
    fn from_poly(p: &LaurentPoly, ctx: &Self::Ctx) -> Self;
    fn from_rq(x: &RationalQ, ctx: &Self::Ctx) -> Result<Self, ScalarError>;
    /// Floating value; `q0` is used only by symbolic scalars.
    fn approx(&self, q0: f64) -> f64;
}

/// Context of the symbolic scalar field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Exact;

impl Scalar for RationalQ {
    type Ctx = Exact;

    fn zero() -> Self {
        RationalQ::zero()
    }
    fn one() -> Self {
        RationalQ::one()
    }
    fn is_zero(&self) -> bool {
        RationalQ::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_poly(p: &LaurentPoly, _: &Exact) -> Self {
        RationalQ::from_poly(p.clone())
    }
    fn from_rq(x: &RationalQ, _: &Exact) -> Result<Self, ScalarError> {
        Ok(x.clone())
    }
    fn approx(&self, q0: f64) -> f64 {
        self.eval(q0).unwrap_or(f64::NAN)
    }
}

impl Scalar for Surd {
    type Ctx = SurdCtx;

    fn zero() -> Self {
        Surd::zero()
    }
    fn one() -> Self {
        Surd::one()
    }
    fn is_zero(&self) -> bool {
        Surd::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn recip(&self) -> Option<Self> {
        self.inv()
    }
    fn from_poly(p: &LaurentPoly, ctx: &SurdCtx) -> Self {
        ctx.eval_poly(p)
    }
    fn from_rq(x: &RationalQ, ctx: &SurdCtx) -> Result<Self, ScalarError> {
        ctx.eval(x)
    }
    fn approx(&self, _q0: f64) -> f64 {
        self.to_f64()
    }
}
