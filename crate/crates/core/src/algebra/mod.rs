//! Exact arithmetic: fields, Laurent polynomials, rational functions,
//! matrices and determinants, and integer Smith normal form.

pub(crate) mod dense;
mod field;
mod laurent;
mod matrix;
mod rational;
mod render;
mod snf;

use thiserror::Error;

pub use field::{ExtensionSpec, Field, FieldElement, FieldOp, FieldSpec, MAX_CHARACTERISTIC};
pub use laurent::LaurentPoly;
pub use matrix::{FieldMatrix, PolyMatrix};
pub use rational::RationalFunction;
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

pub(crate) use field::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
}
