//! Exact computations with Brauer algebras acting on symplectic tensor space.
//!
//! Everything runs over ℚ or a prime field with exact arithmetic. The crate
//! provides the Brauer algebra B_n(x) on its diagram basis, the signed right
//! action on V^{⊗n} for dim V = 2m, cellular bases, divided-power actions of
//! sp_{2m}, the symplectic Schur algebra on its orbit basis and the type C
//! crystal of words, together with the verification suites that compare them.

pub mod brauer;
pub mod cellular;
pub mod cli;
pub mod crystal;
pub mod exactla;
pub mod hyperalgebra;
pub mod perm;
pub mod report;
pub mod schur;
pub mod tensor;

/// Errors shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parameter mismatch: {0}")]
    Parameter(String),
    #[error("resource guard: {0}")]
    Guard(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
