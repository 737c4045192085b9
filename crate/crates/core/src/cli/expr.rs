//! Expression language shared by the CLI subcommands.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' int)?
//! base   := token | rational | '(' expr ')'
//! ```

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::coordalg::Coord;
use crate::podles::Podles;
use crate::qscalar::{Exact, RationalQ};
use crate::uq::UqElement;
use crate::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    SmallA,
    SmallB,
    SmallC,
    SmallD,
    Binv,
    Cinv,
    A,
    B,
    Bs,
    E,
    F,
    K,
    Kinv,
    Q,
    Qinv,
}

const TOKENS: [(&str, Token); 15] = [
    ("a", Token::SmallA),
    ("b", Token::SmallB),
    ("c", Token::SmallC),
    ("d", Token::SmallD),
    ("binv", Token::Binv),
    ("cinv", Token::Cinv),
    ("A", Token::A),
    ("B", Token::B),
    ("Bs", Token::Bs),
    ("E", Token::E),
    ("F", Token::F),
    ("K", Token::K),
    ("Kinv", Token::Kinv),
    ("q", Token::Q),
    ("qinv", Token::Qinv),
];

/// Which algebra a token lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Coord,
    Podles,
    Uq,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Context::Coord => "O(SU_q(2))",
            Context::Podles => "O(S_q^2)",
            Context::Uq => "U_q(su_2)",
        })
    }
}

impl Token {
    pub fn from_name(s: &str) -> Option<Self> {
        TOKENS.iter().find(|(n, _)| *n == s).map(|(_, t)| *t)
    }

    pub fn name(self) -> &'static str {
        TOKENS.iter().find(|(_, t)| *t == self).map(|(n, _)| *n).expect("listed")
    }

    /// `None` for scalars, which are valid everywhere.
    pub fn home(self) -> Option<Context> {
        use Token::*;
        match self {
            SmallA | SmallB | SmallC | SmallD | Binv | Cinv => Some(Context::Coord),
            A | B | Bs => Some(Context::Podles),
            E | F | K | Kinv => Some(Context::Uq),
            Q | Qinv => None,
        }
    }

    fn inverse(self) -> Option<Self> {
        use Token::*;
        match self {
            SmallB => Some(Binv),
            Binv => Some(SmallB),
            SmallC => Some(Cinv),
            Cinv => Some(SmallC),
            K => Some(Kinv),
            Kinv => Some(K),
            Q => Some(Qinv),
            Qinv => Some(Q),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Token(Token),
    Number(BigRational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ExprError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown token '{token}' at {pos}")]
    UnknownToken { pos: usize, token: String },
    #[error("token '{token}' is not valid in {context}")]
    TokenContext { token: String, context: Context },
    #[error("negative power of a non-invertible expression")]
    NegativePower,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq)]
enum Lex {
    Ident(String),
    Num(BigRational),
    Int(i64),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Lex)>, ExprError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Lex::Ident(word)));
        } else if ch.is_ascii_digit() {
            let digits = |i: &mut usize| {
                let start = *i;
                while *i < chars.len() && chars[*i].1.is_ascii_digit() {
                    *i += 1;
                }
                chars[start..*i].iter().map(|(_, c)| c).collect::<String>()
            };
            let n: BigInt = digits(&mut i).parse().expect("digits");
            let after_caret = matches!(out.last(), Some((_, Lex::Op('^'))))
                || matches!(out.as_slice(), [.., (_, Lex::Op('^')), (_, Lex::Op('-'))]);
            if after_caret {
                let v = i64::try_from(n).map_err(|_| ExprError::Syntax { pos, msg: "exponent too large".into() })?;
                out.push((pos, Lex::Int(v)));
                continue;
            }
            if i + 1 < chars.len() && chars[i].1 == '/' && chars[i + 1].1.is_ascii_digit() {
                i += 1;
                let d: BigInt = digits(&mut i).parse().expect("digits");
                if d.is_zero() {
                    return Err(ExprError::Syntax { pos, msg: "zero denominator".into() });
                }
                out.push((pos, Lex::Num(BigRational::new(n, d))));
            } else {
                out.push((pos, Lex::Num(BigRational::from_integer(n))));
            }
        } else if "+-*^()".contains(ch) {
            out.push((pos, Lex::Op(ch)));
            i += 1;
        } else {
            return Err(ExprError::Syntax { pos, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Lex)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Lex> {
        self.toks.get(self.at).map(|(_, l)| l)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(Lex::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.at += 1;
            let rhs = self.term()?;
            lhs = if op == '+' { Expr::Add(lhs.into(), rhs.into()) } else { Expr::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while let Some(Lex::Op('*')) = self.peek() {
            self.at += 1;
            let rhs = self.factor()?;
            lhs = Expr::Mul(lhs.into(), rhs.into());
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if let Some(Lex::Op('-')) = self.peek() {
            self.at += 1;
            return Ok(Expr::Neg(self.factor()?.into()));
        }
        let base = self.base()?;
        if let Some(Lex::Op('^')) = self.peek() {
            self.at += 1;
            let sign = if let Some(Lex::Op('-')) = self.peek() {
                self.at += 1;
                -1
            } else {
                1
            };
            match self.peek().cloned() {
                Some(Lex::Int(n)) => {
                    self.at += 1;
                    return Ok(Expr::Pow(base.into(), sign * n));
                }
                _ => return self.err("expected an integer exponent"),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Lex::Ident(w)) => {
                self.at += 1;
                Token::from_name(&w).map(Expr::Token).ok_or(ExprError::UnknownToken { pos, token: w })
            }
            Some(Lex::Num(n)) => {
                self.at += 1;
                Ok(Expr::Number(n))
            }
            Some(Lex::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Lex::Op(')')) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(e)
            }
            Some(_) => self.err("expected a token, a number or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) | Expr::Pow(..) => 3,
            Expr::Token(_) | Expr::Number(_) => 4,
        }
    }

    fn render(&self, min: u8, out: &mut String) {
        if self.level() < min {
            out.push('(');
            self.render(0, out);
            out.push(')');
            return;
        }
        match self {
            Expr::Token(t) => out.push_str(t.name()),
            Expr::Number(n) => out.push_str(&n.to_string()),
            Expr::Neg(x) => {
                out.push('-');
                x.render(3, out);
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                l.render(1, out);
                out.push_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " });
                r.render(2, out);
            }
            Expr::Mul(l, r) => {
                l.render(2, out);
                out.push('*');
                r.render(3, out);
            }
            Expr::Pow(b, n) => {
                b.render(4, out);
                out.push('^');
                out.push_str(&n.to_string());
            }
        }
    }

    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<Token>) {
        match self {
            Expr::Token(t) => out.push(*t),
            Expr::Number(_) => {}
            Expr::Neg(x) | Expr::Pow(x, _) => x.collect(out),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    /// Smallest context containing every token, or a context error for mixed input.
    pub fn infer_context(&self) -> Result<Context, ExprError> {
        let homes: Vec<(Token, Context)> = self.tokens().into_iter().filter_map(|t| t.home().map(|h| (t, h))).collect();
        let uq = homes.iter().find(|(_, h)| *h == Context::Uq);
        let alg = homes.iter().find(|(_, h)| *h != Context::Uq);
        match (uq, alg) {
            (Some(_), Some((t, _))) => Err(ExprError::TokenContext { token: t.name().into(), context: Context::Uq }),
            (Some(_), None) => Ok(Context::Uq),
            _ if homes.iter().any(|(_, h)| *h == Context::Coord) => Ok(Context::Coord),
            _ => Ok(Context::Podles),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(&s)
    }
}

/// Targets an expression can be evaluated into.
pub trait Target: Sized + Clone {
    const CONTEXT: Context;
    fn scalar(c: RationalQ) -> Self;
    fn token(t: Token) -> Result<Self, ExprError>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

fn context_error(t: Token, c: Context) -> ExprError {
    ExprError::TokenContext { token: t.name().to_string(), context: c }
}

fn scalar_token(t: Token) -> Option<RationalQ> {
    match t {
        Token::Q => Some(RationalQ::q()),
        Token::Qinv => Some(RationalQ::q_pow(-1)),
        _ => None,
    }
}

impl Target for Coord {
    const CONTEXT: Context = Context::Coord;
    fn scalar(c: RationalQ) -> Self {
        Coord::constant(c)
    }
    fn token(t: Token) -> Result<Self, ExprError> {
        if let Some(c) = scalar_token(t) {
            return Ok(Coord::constant(c));
        }
        Ok(match t {
            Token::SmallA => Coord::a(),
            Token::SmallB => Coord::b(),
            Token::SmallC => Coord::c(),
            Token::SmallD => Coord::d(),
            Token::Binv => Coord::gen_binv(&Exact),
            Token::Cinv => Coord::gen_cinv(&Exact),
            Token::A | Token::B | Token::Bs => <Podles as Target>::token(t)?.embed(),
            _ => return Err(context_error(t, Context::Coord)),
        })
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self.times(o)
    }
}

impl Target for Podles {
    const CONTEXT: Context = Context::Podles;
    fn scalar(c: RationalQ) -> Self {
        Podles::constant(c)
    }
    fn token(t: Token) -> Result<Self, ExprError> {
        if let Some(c) = scalar_token(t) {
            return Ok(Podles::constant(c));
        }
        Ok(match t {
            Token::A => Podles::gen_a(),
            Token::B => Podles::gen_b(),
            Token::Bs => Podles::gen_bs(),
            _ => return Err(context_error(t, Context::Podles)),
        })
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self.times(o)
    }
}

impl Target for UqElement {
    const CONTEXT: Context = Context::Uq;
    fn scalar(c: RationalQ) -> Self {
        UqElement::scalar(c)
    }
    fn token(t: Token) -> Result<Self, ExprError> {
        if let Some(c) = scalar_token(t) {
            return Ok(UqElement::scalar(c));
        }
        Ok(match t {
            Token::E => UqElement::e(),
            Token::F => UqElement::f(),
            Token::K => UqElement::k_pow(1),
            Token::Kinv => UqElement::k_pow(-1),
            _ => return Err(context_error(t, Context::Uq)),
        })
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

fn power<T: Target>(x: &T, n: u64) -> T {
    let mut acc = T::scalar(RationalQ::one());
    for _ in 0..n {
        acc = acc.mul(x);
    }
    acc
}

pub fn eval<T: Target>(e: &Expr) -> Result<T, ExprError> {
    Ok(match e {
        Expr::Token(t) => T::token(*t)?,
        Expr::Number(n) => T::scalar(RationalQ::from_rational(n.clone())),
        Expr::Neg(x) => T::scalar(RationalQ::zero()).sub(&eval::<T>(x)?),
        Expr::Add(l, r) => eval::<T>(l)?.add(&eval::<T>(r)?),
        Expr::Sub(l, r) => eval::<T>(l)?.sub(&eval::<T>(r)?),
        Expr::Mul(l, r) => eval::<T>(l)?.mul(&eval::<T>(r)?),
        Expr::Pow(b, n) if *n >= 0 => power(&eval::<T>(b)?, *n as u64),
        Expr::Pow(b, n) => {
            let inv = match b.as_ref() {
                Expr::Token(t) => T::token(t.inverse().ok_or(ExprError::NegativePower)?)?,
                Expr::Number(x) if !x.is_zero() => T::scalar(RationalQ::from_rational(BigRational::one() / x)),
                _ => return Err(ExprError::NegativePower),
            };
            power(&inv, n.unsigned_abs())
        }
    })
}

/// Parses and evaluates in one step.
pub fn parse_as<T: Target>(text: &str) -> Result<T, ExprError> {
    eval(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_rendering() {
        let e = parse("q^-1*b*c + 2 - (A - B)").unwrap();
        assert_eq!(e.to_string(), "q^-1*b*c + 2 - (A - B)");
        assert_eq!(parse(&e.to_string()).unwrap(), e);
        assert_eq!(parse("-b^2").unwrap(), Expr::Neg(Expr::Pow(Expr::Token(Token::SmallB).into(), 2).into()));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("a + x").unwrap_err(), ExprError::UnknownToken { pos: 4, token: "x".into() });
        assert!(matches!(parse("a +").unwrap_err(), ExprError::Syntax { pos: 3, .. }));
        assert!(matches!(parse("(a").unwrap_err(), ExprError::Syntax { .. }));
    }

    #[test]
    fn context_errors() {
        assert!(matches!(parse_as::<Coord>("E"), Err(ExprError::TokenContext { .. })));
        assert!(matches!(parse_as::<Podles>("a"), Err(ExprError::TokenContext { .. })));
        assert!(matches!(parse("E*a").unwrap().infer_context(), Err(ExprError::TokenContext { .. })));
    }

    #[test]
    fn q_inverse_bc_is_minus_a() {
        let x: Coord = parse_as("-q^-1*b*c").unwrap();
        assert_eq!(x, Podles::gen_a().embed());
        let y: Podles = parse_as("Bs*B").unwrap();
        assert_eq!(y, &Podles::gen_a() - &Podles::gen_a().pow(2));
    }
}
