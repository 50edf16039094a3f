//! Coxeter groupoids and Iwahori-Hecke type algebras attached to the basic
//! classical Lie superalgebras of types A(m,n), B(m,n), C(n) and D(m,n).
//!
//! All arithmetic is exact. Algebras are generic over the scalar ring; the aliases
//! below fix the two scalar modes used throughout: Laurent polynomials in `q` and
//! rationals obtained by specialising `q`.

pub mod checks;
pub mod domains;
pub mod dynkin;
pub mod error;
pub mod groupoid;
pub mod hecke;
pub mod linalg;
pub mod output;
pub mod relations;
pub mod rootsys;
pub mod scalar;
pub mod superreps;
pub mod weylreps;

pub use error::Error;
pub use scalar::{Field, LaurentPoly, RationalFunction, Ring, ScalarError, Specialize};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

/// Generic Hecke algebra over Laurent polynomials in `q`.
pub type PolyHecke = hecke::HeckeAlgebra<LaurentPoly>;
/// Hecke algebra at a rational value of `q`.
pub type EvalHecke = hecke::HeckeAlgebra<Rational>;
