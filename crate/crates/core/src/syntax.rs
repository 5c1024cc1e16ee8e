//! The element grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' int]
//! atom   := rational | 'z' | param | 'x'<i> | 'g'<i> | '(' expr ')'
//!         | '[' letters ']'          super letter, must be Lyndon
//!         | '[' expr ',' expr ']'    q-commutator
//! ```
//!
//! An identifier such as `x1x1x2` is shorthand for `x1 x1 x2` and binds as one
//! factor, so `x1x2^2` means `(x1 x2)^2`.

use crate::lyndon::Word;
use crate::scalars::{CycloNumber, ParamScalar};
use crate::smash::{Expr, GroupWord};
use crate::{Rat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("`{word}` at {pos} is not a Lyndon word")]
    NotLyndonInBrackets { pos: usize, word: String },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u32,
}

fn is_ident(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

/// Splits identifiers like `x1x1x2` into 0-based letters.
fn letters_of(name: &str) -> Option<Vec<u8>> {
    let rest = name.strip_prefix('x')?;
    rest.split('x')
        .map(|p| p.parse::<u8>().ok().filter(|&i| i > 0).map(|i| i - 1))
        .collect()
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError { pos: self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
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

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.peek();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        match std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected integer")
            }
        }
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && is_ident(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn expr(&mut self) -> Result<Expr<Scalar>, ParseError> {
        let mut items = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            items.push(if negative { Expr::neg(t) } else { t });
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { Expr::Sum(items) })
    }

    fn term(&mut self) -> Result<Expr<Scalar>, ParseError> {
        let mut items = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    items.push(self.factor()?);
                }
                Some(c) if is_ident(c) || c == b'(' || c == b'[' => items.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { Expr::Product(items) })
    }

    fn factor(&mut self) -> Result<Expr<Scalar>, ParseError> {
        let start = self.pos;
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = self.integer()?;
        match base {
            Expr::Group(g) => Ok(Expr::Group(GroupWord::new(g.exponents().iter().map(|x| x * e).collect()))),
            Expr::Scalar(c) => match c.powi(e) {
                Ok(v) => Ok(Expr::Scalar(v)),
                Err(err) => {
                    self.pos = start;
                    self.err(err.to_string())
                }
            },
            other if e >= 0 => Ok(Expr::pow(other, e as u32)),
            _ => {
                self.pos = start;
                self.err("negative power of a non-unit")
            }
        }
    }

    fn atom(&mut self) -> Result<Expr<Scalar>, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                self.bracket(start)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut v = Rat::from_integer(num.into());
                if self.eat(b'/') {
                    let den = self.integer()?;
                    if den <= 0 {
                        return self.err("denominator must be positive");
                    }
                    v /= Rat::from_integer(den.into());
                }
                Ok(Expr::Scalar(ParamScalar::constant(CycloNumber::from_rational(v))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                let index = |s: &str| s.parse::<usize>().ok().filter(|&i| i > 0);
                if name == "z" {
                    return Ok(Expr::Scalar(ParamScalar::constant(CycloNumber::zeta(self.order, 1))));
                }
                if let Some(ls) = letters_of(name) {
                    let mut gens: Vec<Expr<Scalar>> = ls.into_iter().map(Expr::Gen).collect();
                    return Ok(if gens.len() == 1 { gens.pop().expect("one letter") } else { Expr::Product(gens) });
                }
                if name.starts_with('x') && name[1..].chars().all(|c| c.is_ascii_digit()) {
                    return self.err("bad generator index");
                }
                if let Some(i) = name.strip_prefix('g').and_then(index) {
                    let mut e = vec![0; i];
                    e[i - 1] = 1;
                    return Ok(Expr::Group(GroupWord::new(e)));
                }
                Ok(Expr::Scalar(ParamScalar::param(name)))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }

    fn bracket(&mut self, start: usize) -> Result<Expr<Scalar>, ParseError> {
        // Try a plain word of letters first.
        let save = self.pos;
        let mut letters = Vec::new();
        loop {
            match self.peek() {
                Some(b'x') => {
                    let p = self.pos;
                    let name = self.ident();
                    match letters_of(name) {
                        Some(ls) if self.peek() != Some(b'^') => letters.extend(ls),
                        _ => {
                            self.pos = p;
                            break;
                        }
                    }
                }
                Some(b']') if !letters.is_empty() => {
                    self.pos += 1;
                    let w = Word::new(letters);
                    if !w.is_lyndon().unwrap_or(false) {
                        return Err(ParseError::NotLyndonInBrackets { pos: start, word: w.to_string() });
                    }
                    return Ok(Expr::SuperLetter(w));
                }
                _ => break,
            }
        }
        self.pos = save;
        let a = self.expr()?;
        if !self.eat(b',') {
            return self.err("expected `,` or a word of letters in brackets");
        }
        let b = self.expr()?;
        if !self.eat(b']') {
            return self.err("expected `]`");
        }
        Ok(Expr::commutator(a, b))
    }
}

/// Parses an element expression; `z` is the primitive root of order `order`.
pub fn parse_expr(src: &str, order: u32) -> Result<Expr<Scalar>, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, order };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::BraidingMatrix;
    use crate::smash::SmashAlgebra;

    fn alg() -> SmashAlgebra<Scalar> {
        let p = Scalar::param;
        SmashAlgebra::new(BraidingMatrix::new(vec![vec![p("q11"), p("q12")], vec![p("q21"), p("q22")]]).unwrap())
    }

    #[test]
    fn super_letter_parses() {
        let a = alg();
        let e = parse_expr("[x1 x2]", 12).unwrap().eval(&a).unwrap();
        let f = parse_expr("x1 x2 - q12 x2 x1", 12).unwrap().eval(&a).unwrap();
        assert_eq!(e, f);
        let c = parse_expr("[x1, [x1, x2]]", 12).unwrap().eval(&a).unwrap();
        assert_eq!(c, parse_expr("[x1x1x2]", 12).unwrap().eval(&a).unwrap());
    }

    #[test]
    fn not_lyndon() {
        assert!(matches!(parse_expr("[x2 x1]", 12), Err(ParseError::NotLyndonInBrackets { .. })));
    }

    #[test]
    fn lifting_generator() {
        let a = alg();
        let e = parse_expr("x1^2 - mu1 (1 - g1^2)", 12).unwrap().eval(&a).unwrap();
        assert_eq!(e.len(), 3);
        let text = e.to_syntax(12);
        assert_eq!(parse_expr(&text, 12).unwrap().eval(&a).unwrap(), e, "{text}");
    }

    #[test]
    fn errors_have_positions() {
        match parse_expr("x1 + )", 12) {
            Err(ParseError::SyntaxError { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
    }
}
