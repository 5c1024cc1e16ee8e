//! Exact symbolic engine for q-commutators, Lyndon words and PBW bases,
//! coproducts in smash products `k<X> # k[G]`, and verification of
//! presentations and liftings of rank-two Nichols algebras of diagonal type.
//!
//! The algebra layers are generic over [`scalars::Coefficient`]; the aliases
//! below fix the usual choice of big rationals.

pub mod braiding;
pub mod catalog;
pub mod hopf;
pub mod lyndon;
pub mod pbw;
pub mod scalars;
pub mod smash;
pub mod syntax;

use num_rational::BigRational;

/// Rational numbers used for cyclotomic coordinates.
pub type Rat = BigRational;
/// Exact element of a cyclotomic field.
pub type Cyclo = scalars::CycloNumber<Rat>;
/// Laurent polynomial in named parameters over [`Cyclo`].
pub type Scalar = scalars::ParamScalar<Rat>;
/// Element of the smash product with symbolic coefficients.
pub type Element = smash::SmashElement<Scalar>;
