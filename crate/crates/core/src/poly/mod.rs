//! Exact sparse multivariate polynomials.

mod coeff;
mod monomial;
mod parse;
mod polynomial;

pub use coeff::{Coefficient, FieldTag, Fp, Rational, DEFAULT_PRIME};
pub use monomial::{Exponents, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Term};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("linear substitution matrix is singular")]
    SingularSubstitution,
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("a denominator vanishes modulo {0}")]
    DenominatorVanishes(u64),
}
