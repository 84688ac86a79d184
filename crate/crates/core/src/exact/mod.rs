//! Exact arithmetic: rationals, multivariate polynomials over the rationals,
//! rational functions, and quadratic root data.

mod parse;
mod poly;
mod quad;
mod ratfunc;
mod scalar;
mod var;

pub use poly::{Monomial, MultiPoly};
pub use quad::{quadratic_root_data, QuadRootData};
pub use ratfunc::RatFunc;
pub use scalar::{format_scalar, parse_scalar, ExactScalar};
pub use var::Var;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial has degree {0} in the selected variable, expected 2")]
    NotQuadratic(u32),
    #[error("parse error: {0}")]
    Parse(String),
}
