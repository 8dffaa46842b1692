//! Parser for the polynomial text syntax, e.g. `(-3/2+1/2*I)*a^2*t`.
//!
//! Accepts general rational expressions: `+ - * / ^`, parentheses, integer
//! literals, `I` for the imaginary unit and identifiers for variables.
//! Negative exponents are allowed.

use thiserror::Error;

use super::gaussrat::GaussRat;
use super::mpoly::MPoly;
use super::ratfun::RatFun;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("trailing input at offset {0}")]
    Trailing(usize),
    #[error("division by zero in expression")]
    DivisionByZero,
    #[error("expression is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("integer literal too large")]
    Overflow,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFun, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFun, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|_| ParseError::DivisionByZero)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFun, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFun, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e = i32::try_from(e).map_err(|_| ParseError::Overflow)?;
            return base.pow(if neg { -e } else { e }).map_err(|_| ParseError::DivisionByZero);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            Some(c) => return Err(ParseError::UnexpectedChar(c as char, self.pos)),
            None => return Err(ParseError::UnexpectedEnd),
        }
        let start = start.max(self.pos);
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| ParseError::Overflow)
    }

    fn atom(&mut self) -> Result<RatFun, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(e)
                    }
                    Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: num_bigint::BigInt = s.parse().map_err(|_| ParseError::Overflow)?;
                Ok(RatFun::from_const(GaussRat::from_rational(num_rational::BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "I" {
                    Ok(RatFun::i())
                } else {
                    Ok(RatFun::var(name))
                }
            }
            Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
        }
    }
}

/// Parses a rational expression into canonical form.
pub fn parse_ratfun(text: &str) -> Result<RatFun, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(ParseError::Trailing(p.pos));
    }
    Ok(e)
}

/// Parses an expression that must evaluate to a polynomial.
pub fn parse_poly(text: &str) -> Result<MPoly, ParseError> {
    let f = parse_ratfun(text)?;
    if !f.is_polynomial() {
        return Err(ParseError::NotPolynomial(text.to_string()));
    }
    let c = f.den().as_constant().unwrap().inv().unwrap();
    Ok(f.num().scale(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_syntax_round_trips() {
        for s in ["(-3/2+1/2*I)*a^2*t", "2+5*t^2+2*t^4", "-1+2*t", "(I)*x+y^3", "0", "(1+x)/(-1+a)"] {
            let f = parse_ratfun(s).unwrap();
            assert_eq!(parse_ratfun(&f.render()).unwrap(), f, "{s}");
        }
        assert_eq!(parse_poly("(-3/2+1/2*I)*a^2*t").unwrap().render(), "(-3/2+1/2*I)*a^2*t");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_ratfun("1+"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_ratfun("x $"), Err(ParseError::Trailing(_)) | Err(ParseError::UnexpectedChar(..))));
        assert_eq!(parse_ratfun("1/0"), Err(ParseError::DivisionByZero));
        assert!(matches!(parse_poly("1/x"), Err(ParseError::NotPolynomial(_))));
    }
}
