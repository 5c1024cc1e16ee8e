//! Exact coefficient arithmetic.
//!
//! Everything in the engine is computed over [`CycloNumber`]s (elements of a
//! cyclotomic field `Q(z)`) or over [`ParamScalar`]s (Laurent polynomials in
//! named parameters with cyclotomic coefficients). Algebra code is generic
//! over the [`Coefficient`] trait so the same routines run numerically or
//! symbolically.

mod cyclotomic;
mod param;
mod qcalc;
mod syntax;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycloNumber};
pub use param::{Monomial, Param, ParamScalar};
pub use qcalc::{
    eval_poly, gaussian_binomial_poly, q_binomial, q_factorial, q_factorial_poly, q_number, q_number_poly, q_value, QKind,
};
pub use syntax::{parse_cyclo, parse_scalar, ScalarParseError};

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("inversion of non-unit {0}")]
    InversionOfNonUnit(String),
    #[error("multiplicative order of zero")]
    ZeroInput,
    #[error("index out of range: n = {n}, i = {i}")]
    IndexOutOfRange { n: i64, i: i64 },
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    #[error("invertible parameter `{0}` assigned zero")]
    ZeroForInvertible(String),
    #[error("plain parameter `{0}` with negative exponent")]
    NegativePlainExponent(String),
}

/// Rational numbers usable as cyclotomic coordinates.
///
/// Blanket-implemented for `num_rational::Ratio<T>` over any signed integer
/// type, including `BigInt`.
pub trait RationalScalar:
    Num
    + Signed
    + FromPrimitive
    + FromStr
    + Clone
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> RationalScalar for T where
    T: Num
        + Signed
        + FromPrimitive
        + FromStr
        + Clone
        + Ord
        + Hash
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// A commutative ring of exact coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Rational: RationalScalar;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_cyclo(c: CycloNumber<Self::Rational>) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Inverse when `self` is a unit of the ring.
    fn inverse(&self) -> Option<Self>;
    /// The numeric value when no parameters occur.
    fn as_cyclo(&self) -> Option<CycloNumber<Self::Rational>>;
    /// Canonical text with `z` standing for the primitive root of order `n`.
    fn to_syntax(&self, n: u32) -> String;
    /// Least root-of-unity order in which the value is written.
    fn root_order(&self) -> u32;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    /// Integer power; negative exponents require a unit.
    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.times(&sq);
            }
        }
        Some(acc)
    }
}
