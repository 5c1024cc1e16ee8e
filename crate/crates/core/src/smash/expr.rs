//! Expression trees shared by the parser, the catalog and coproduct evaluation.

use std::fmt;

use super::{coefficient_text, GroupWord, SmashAlgebra, SmashElement, SmashError};
use crate::lyndon::{LyndonError, Word};
use crate::scalars::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("q-commutator of a non-homogeneous expression")]
    NotHomogeneous,
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
    #[error("{0}")]
    Algebra(String),
}

impl From<SmashError> for ExprError {
    fn from(e: SmashError) -> Self {
        match e {
            SmashError::NotHomogeneous => ExprError::NotHomogeneous,
            SmashError::Lyndon(l) => ExprError::Lyndon(l),
            other => ExprError::Algebra(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr<C> {
    Scalar(C),
    /// `x_(i+1)` for 0-based `i`.
    Gen(u8),
    Group(GroupWord),
    Sum(Vec<Expr<C>>),
    Neg(Box<Expr<C>>),
    Product(Vec<Expr<C>>),
    /// `[a, b] = ab - q_(a,b) ba`.
    Commutator(Box<Expr<C>>, Box<Expr<C>>),
    SuperLetter(Word),
    Power(Box<Expr<C>>, u32),
}

/// An algebra in which expressions can be evaluated.
pub trait ExprAlgebra<C: Coefficient> {
    type Elem: Clone;

    fn theta(&self) -> usize;
    fn scalar(&self, c: &C) -> Self::Elem;
    fn generator(&self, i: u8) -> Self::Elem;
    fn group_element(&self, g: &GroupWord) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &C) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ExprError>;
    fn bicharacter(&self, a: &[i64], b: &[i64]) -> C;

    fn super_letter(&self, u: &Word) -> Result<Self::Elem, ExprError> {
        default_super_letter(self, u)
    }

    fn power(&self, a: &Self::Elem, n: u32) -> Result<Self::Elem, ExprError> {
        let mut acc = self.scalar(&C::one());
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }
}

/// `[u] = [[v], [w]]` evaluated through the algebra's own operations.
pub fn default_super_letter<C: Coefficient, A: ExprAlgebra<C> + ?Sized>(alg: &A, u: &Word) -> Result<A::Elem, ExprError> {
    if !u.is_lyndon()? {
        return Err(LyndonError::NotLyndon(u.clone()).into());
    }
    if u.len() == 1 {
        return Ok(alg.generator(u.letters()[0]));
    }
    let (v, w) = u.shirshov()?;
    let a = alg.super_letter(&v)?;
    let b = alg.super_letter(&w)?;
    let q = alg.bicharacter(&v.multidegree(alg.theta()), &w.multidegree(alg.theta()));
    let ab = alg.mul(&a, &b)?;
    let ba = alg.mul(&b, &a)?;
    Ok(alg.add(&ab, &alg.scale(&ba, &q.negated())))
}

impl<C: Coefficient> Expr<C> {
    pub fn scalar(c: C) -> Self {
        Expr::Scalar(c)
    }

    pub fn sum(items: Vec<Expr<C>>) -> Self {
        Expr::Sum(items)
    }

    pub fn product(items: Vec<Expr<C>>) -> Self {
        Expr::Product(items)
    }

    pub fn neg(e: Expr<C>) -> Self {
        Expr::Neg(Box::new(e))
    }

    pub fn pow(e: Expr<C>, n: u32) -> Self {
        Expr::Power(Box::new(e), n)
    }

    pub fn commutator(a: Expr<C>, b: Expr<C>) -> Self {
        Expr::Commutator(Box::new(a), Box::new(b))
    }

    /// Letter multidegree; `None` for a non-homogeneous sum.
    pub fn multidegree(&self, theta: usize) -> Option<Vec<i64>> {
        match self {
            Expr::Scalar(_) | Expr::Group(_) => Some(vec![0; theta]),
            Expr::Gen(i) => {
                let mut d = vec![0; theta];
                d[*i as usize] += 1;
                Some(d)
            }
            Expr::SuperLetter(w) => Some(w.multidegree(theta)),
            Expr::Neg(e) => e.multidegree(theta),
            Expr::Power(e, n) => e.multidegree(theta).map(|d| d.iter().map(|x| x * *n as i64).collect()),
            Expr::Sum(items) => {
                let mut degs = items.iter().map(|e| e.multidegree(theta));
                let first = degs.next().unwrap_or(Some(vec![0; theta]))?;
                for d in degs {
                    if d? != first {
                        return None;
                    }
                }
                Some(first)
            }
            Expr::Product(items) => items.iter().try_fold(vec![0; theta], |acc, e| {
                e.multidegree(theta).map(|d| acc.iter().zip(&d).map(|(a, b)| a + b).collect())
            }),
            Expr::Commutator(a, b) => {
                let (da, db) = (a.multidegree(theta)?, b.multidegree(theta)?);
                Some(da.iter().zip(&db).map(|(x, y)| x + y).collect())
            }
        }
    }

    pub fn eval<A: ExprAlgebra<C> + ?Sized>(&self, alg: &A) -> Result<A::Elem, ExprError> {
        Ok(match self {
            Expr::Scalar(c) => alg.scalar(c),
            Expr::Gen(i) => alg.generator(*i),
            Expr::Group(g) => alg.group_element(g),
            Expr::SuperLetter(w) => alg.super_letter(w)?,
            Expr::Neg(e) => alg.scale(&e.eval(alg)?, &C::one().negated()),
            Expr::Power(e, n) => alg.power(&e.eval(alg)?, *n)?,
            Expr::Sum(items) => {
                let mut acc = alg.scalar(&C::zero());
                for e in items {
                    acc = alg.add(&acc, &e.eval(alg)?);
                }
                acc
            }
            Expr::Product(items) => {
                let mut acc = alg.scalar(&C::one());
                for e in items {
                    acc = alg.mul(&acc, &e.eval(alg)?)?;
                }
                acc
            }
            Expr::Commutator(a, b) => {
                let theta = alg.theta();
                let da = a.multidegree(theta).ok_or(ExprError::NotHomogeneous)?;
                let db = b.multidegree(theta).ok_or(ExprError::NotHomogeneous)?;
                let q = alg.bicharacter(&da, &db);
                let (x, y) = (a.eval(alg)?, b.eval(alg)?);
                let xy = alg.mul(&x, &y)?;
                let yx = alg.mul(&y, &x)?;
                alg.add(&xy, &alg.scale(&yx, &q.negated()))
            }
        })
    }

    pub fn try_map_scalars<D: Coefficient, E>(&self, f: &impl Fn(&C) -> Result<D, E>) -> Result<Expr<D>, E> {
        Ok(match self {
            Expr::Scalar(c) => Expr::Scalar(f(c)?),
            Expr::Gen(i) => Expr::Gen(*i),
            Expr::Group(g) => Expr::Group(g.clone()),
            Expr::SuperLetter(w) => Expr::SuperLetter(w.clone()),
            Expr::Neg(e) => Expr::Neg(Box::new(e.try_map_scalars(f)?)),
            Expr::Power(e, n) => Expr::Power(Box::new(e.try_map_scalars(f)?), *n),
            Expr::Sum(items) => Expr::Sum(items.iter().map(|e| e.try_map_scalars(f)).collect::<Result<_, _>>()?),
            Expr::Product(items) => Expr::Product(items.iter().map(|e| e.try_map_scalars(f)).collect::<Result<_, _>>()?),
            Expr::Commutator(a, b) => Expr::Commutator(Box::new(a.try_map_scalars(f)?), Box::new(b.try_map_scalars(f)?)),
        })
    }

    /// Splits a generator `head + rest` at its first summand.
    pub fn split_head(&self) -> (Expr<C>, Expr<C>) {
        match self {
            Expr::Sum(items) if !items.is_empty() => (items[0].clone(), Expr::Sum(items[1..].to_vec())),
            other => (other.clone(), Expr::Sum(Vec::new())),
        }
    }

    /// Text in the element grammar.
    pub fn to_syntax(&self, n: u32) -> String {
        match self {
            Expr::Scalar(c) => {
                let (neg, body) = coefficient_text(c, n);
                let body = if body.is_empty() { "1".to_string() } else { body };
                if neg {
                    format!("-{body}")
                } else {
                    body
                }
            }
            Expr::Gen(i) => format!("x{}", i + 1),
            Expr::Group(g) => g.to_string(),
            Expr::SuperLetter(w) => {
                if w.len() == 1 {
                    w.to_string()
                } else {
                    format!("[{w}]")
                }
            }
            Expr::Neg(e) => format!("-({})", e.to_syntax(n)),
            Expr::Power(e, k) => format!("({})^{k}", e.to_syntax(n)),
            Expr::Sum(items) if items.is_empty() => "0".into(),
            Expr::Sum(items) => items.iter().map(|e| format!("({})", e.to_syntax(n))).collect::<Vec<_>>().join(" + "),
            Expr::Product(items) if items.is_empty() => "1".into(),
            Expr::Product(items) => items.iter().map(|e| format!("({})", e.to_syntax(n))).collect::<Vec<_>>().join(" "),
            Expr::Commutator(a, b) => format!("[{}, {}]", a.to_syntax(n), b.to_syntax(n)),
        }
    }
}

impl<C: Coefficient> fmt::Display for Expr<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_syntax(12))
    }
}

impl<C: Coefficient> ExprAlgebra<C> for SmashAlgebra<C> {
    type Elem = SmashElement<C>;

    fn theta(&self) -> usize {
        SmashAlgebra::theta(self)
    }
    fn scalar(&self, c: &C) -> Self::Elem {
        SmashElement::scalar(c.clone())
    }
    fn generator(&self, i: u8) -> Self::Elem {
        SmashElement::generator(i)
    }
    fn group_element(&self, g: &GroupWord) -> Self::Elem {
        SmashElement::group(self.group().canonical(g.exponents().to_vec()))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.plus(b)
    }
    fn scale(&self, a: &Self::Elem, c: &C) -> Self::Elem {
        a.scale(c)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ExprError> {
        Ok(SmashAlgebra::mul(self, a, b))
    }
    fn bicharacter(&self, a: &[i64], b: &[i64]) -> C {
        SmashAlgebra::bicharacter(self, a, b)
    }
    fn super_letter(&self, u: &Word) -> Result<Self::Elem, ExprError> {
        Ok(SmashAlgebra::super_letter(self, u)?)
    }
}
