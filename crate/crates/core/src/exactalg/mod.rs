//! Exact scalar arithmetic: Gaussian rationals, sparse multivariate
//! polynomials over them, gcd, reduced rational functions, and the text
//! syntax shared by the CLI and the golden files.

mod gaussrat;
mod gcd;
mod laurent;
mod mpoly;
mod parse;
mod ratfun;

pub use gaussrat::GaussRat;
pub use gcd::{poly_gcd, poly_gcd_many};
pub use laurent::{laurent_normalize, laurent_normalize_t};
pub use mpoly::{grlex, unify, Exps, MPoly, Vars};
pub use parse::{parse_poly, parse_ratfun, ParseError};
pub use ratfun::RatFun;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero: denominator {denominator} vanishes")]
    DivisionByZero { denominator: String },
    #[error("cannot normalize the zero function")]
    ZeroInput,
}
