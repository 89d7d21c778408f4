//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: `+ - * / ^`, parentheses, integer literals and the named
//! variables. Division is only allowed by nonzero constants, which is how
//! rational literals such as `3/2` are written.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coeff::{Coefficient, FieldTag, Rational};
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::PolyError;

/// Parses `source` over `Q` in the variables `vars`, in order.
pub fn parse_polynomial(source: &str, vars: &[String]) -> Result<Polynomial, PolyError> {
    let mut parser = Parser { src: source.as_bytes(), pos: 0, vars };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax { position: self.pos, message: message.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn constant(&self, r: BigRational) -> Polynomial {
        Polynomial::constant(Rational(r), self.nvars(), MonomialOrder::DegRevLex)
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let divisor = self.unary()?;
                let c = match divisor.terms() {
                    [t] if t.mono.is_one() => t.coeff.clone(),
                    [] => {
                        return Err(PolyError::Syntax { position: at, message: "division by zero".into() })
                    }
                    _ => {
                        return Err(PolyError::Syntax {
                            position: at,
                            message: "division is only allowed by a constant".into(),
                        })
                    }
                };
                acc = acc.scale(&c.inv().expect("nonzero"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a non-negative integer exponent"));
            }
            let exp: u32 = digits
                .parse()
                .map_err(|_| PolyError::Syntax { position: start, message: "exponent too large".into() })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(self.constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.vars.iter().position(|v| v == name) {
                    Some(k) => Ok(Polynomial::var(k, self.nvars(), FieldTag::Rationals, MonomialOrder::DegRevLex)),
                    None => Err(PolyError::UnknownVariable { name: name.to_string(), position: start }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
