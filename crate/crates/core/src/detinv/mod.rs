//! The determinant functional `d` and the invariants built from it.

mod det;
mod invariants;

pub use det::{
    bareiss, clear_denominators, det_commutative, det_commutative_cofactor, det_d, det_d_cofactor, embed,
    embedding_units, laplace,
};
pub use invariants::{
    check_minor_independence, classicality_obstruction, delta0, delta1, minor_table, monomial_discrepancy,
    Classicality, InvariantPoly, MinorReport, MonomialMismatch, UnitOrbit,
};

use crate::quat::AlgebraParams;
use crate::ring::MatError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum DetError {
    #[error("determinant needs lambda, mu in {{+1, -1}}; got {0}")]
    UnsupportedParams(Box<AlgebraParams>),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error(transparent)]
    Mat(#[from] MatError),
}
