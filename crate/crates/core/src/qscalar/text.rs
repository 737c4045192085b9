//! Text format for scalars: sums and products of rationals and powers of `q`.
//!
//! Accepts everything the `Display` impls produce, for example
//! `(-1 + q^2)/(1 - q^4)`, `3/2*q^(1/2)`, `q^-1`.

use num::{BigInt, BigRational, One};

use super::{LaurentPoly, RationalQ, ScalarError};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn signed_int(&mut self) -> Result<i64, ScalarError> {
        let neg = self.eat(b'-');
        let n: i64 = self.integer()?.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn expr(&mut self) -> Result<RationalQ, ScalarError> {
        let mut acc = if self.eat(b'-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalQ, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                acc = &acc * &d.inv().map_err(|_| self.err("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalQ, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                if self.eat(b'^') {
                    let n = self.signed_int()?;
                    return v.pow(n);
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                if !self.eat(b'^') {
                    return Ok(RationalQ::q());
                }
                if self.eat(b'(') {
                    let n = self.signed_int()?;
                    let h = if self.eat(b'/') {
                        let d = self.integer()?;
                        if d != BigInt::from(2) {
                            return Err(self.err("only half-integer exponents are supported"));
                        }
                        n
                    } else {
                        2 * n
                    };
                    if !self.eat(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    return Ok(RationalQ::q_half_pow(h));
                }
                Ok(RationalQ::q_pow(self.signed_int()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalQ::from_poly(LaurentPoly::constant(BigRational::new(n, BigInt::one()))))
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

pub fn parse_rational(text: &str) -> Result<RationalQ, ScalarError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let v = cur.expr()?;
    if cur.peek().is_some() {
        return Err(cur.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::qint;

    #[test]
    fn parses_rendered_forms() {
        let one = RationalQ::one();
        let x = (&one - &RationalQ::q_pow(2)) / (&one - &RationalQ::q_pow(6));
        let y = &x * &RationalQ::q_half_pow(-3) + qint(4);
        for v in [x, y, RationalQ::lambda(), RationalQ::from_ratio(-7, 3)] {
            assert_eq!(parse_rational(&v.to_string()).unwrap(), v, "{}", v);
        }
    }

    #[test]
    fn literal_format() {
        let x = parse_rational("(-1 + q^2)/(1 - q^4)").unwrap();
        assert_eq!(x.to_string(), "-1/(1 + q^2)");
    }

    #[test]
    fn reports_position() {
        match parse_rational("1 + x") {
            Err(ScalarError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{:?}", other),
        }
    }
}
