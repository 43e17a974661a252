use thiserror::Error;

use crate::family::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ZeroOffDiagonal: off-diagonal parameter b must be nonzero")]
    ZeroOffDiagonal,

    #[error("InvalidDimension: n = {n} is below the minimum {min} for {context}")]
    InvalidDimension {
        n: usize,
        min: usize,
        context: &'static str,
    },

    #[error("NonFiniteParameter: {0} must have finite real and imaginary parts")]
    NonFiniteParameter(&'static str),

    #[error("DomainError: {0}")]
    Domain(String),

    #[error("SingularSpectrum: {family:?} n = {n} has min |lambda| = {min_abs:e} against max |lambda| = {max_abs:e}; negative powers undefined")]
    SingularSpectrum {
        family: Family,
        n: usize,
        min_abs: f64,
        max_abs: f64,
    },

    #[error("SingularMatrix: pivot magnitude {pivot:e} at step {step}")]
    SingularMatrix { step: usize, pivot: f64 },

    #[error("DimensionMismatch: {left} x {left} against {right} x {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("OverflowExactInteger: {sequence} index {index} exceeds cap {cap}")]
    OverflowExactInteger {
        sequence: &'static str,
        index: u32,
        cap: u32,
    },

    #[error("NonFinite: result overflowed to a non-finite value ({0})")]
    NonFinite(String),

    #[error("InvalidMatrix: {0}")]
    InvalidMatrix(String),
}
