//! Text syntax for scalars: `3/2*z^-2*q12 - lam112 + mu1`.
//!
//! `z` denotes the primitive root of the session order. Factors are joined by
//! `*` or whitespace; parentheses group.

use super::{Coefficient, CycloNumber, ParamScalar, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("scalar syntax error at {pos}: {msg}")]
pub struct ScalarParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u32,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ScalarParseError> {
        Err(ScalarParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<i64, ScalarParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected integer")
        })
    }

    fn expr<Q: RationalScalar>(&mut self) -> Result<ParamScalar<Q>, ScalarParseError> {
        let mut acc = ParamScalar::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub_ref(&t) } else { acc.add_ref(&t) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<Q: RationalScalar>(&mut self) -> Result<ParamScalar<Q>, ScalarParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul_ref(&self.factor()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = acc.mul_ref(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<Q: RationalScalar>(&mut self) -> Result<ParamScalar<Q>, ScalarParseError> {
        let start = self.pos;
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return base.powi(e).or_else(|err| {
                self.pos = start;
                self.err(err.to_string())
            });
        }
        Ok(base)
    }

    fn atom<Q: RationalScalar>(&mut self) -> Result<ParamScalar<Q>, ScalarParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Q::from_i64(num).expect("integer fits");
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den <= 0 {
                        return self.err("denominator must be positive");
                    }
                    value = value / Q::from_i64(den).expect("integer fits");
                }
                Ok(ParamScalar::constant(CycloNumber::from_rational(value)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if name == "z" {
                    Ok(ParamScalar::constant(CycloNumber::zeta(self.order, 1)))
                } else {
                    Ok(ParamScalar::param(name))
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a scalar with `z` read as the primitive root of order `order`.
pub fn parse_scalar<Q: RationalScalar>(src: &str, order: u32) -> Result<ParamScalar<Q>, ScalarParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, order };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a parameter-free scalar.
pub fn parse_cyclo<Q: RationalScalar>(src: &str, order: u32) -> Result<CycloNumber<Q>, ScalarParseError> {
    let v: ParamScalar<Q> = parse_scalar(src, order)?;
    v.as_cyclo().ok_or(ScalarParseError { pos: 0, msg: "parameters not allowed here".into() })
}
