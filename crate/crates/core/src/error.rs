use crate::freealg::FreeAlgError;
use crate::scalar::ScalarError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QgalError {
    #[error(transparent)]
    Algebra(#[from] FreeAlgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("expected an element of {expected}, got one of {found}")]
    WrongAlgebra { expected: String, found: String },
    #[error("counit is only defined on diagonal components, got {0}")]
    OffDiagonal(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },
}

pub type Result<T> = std::result::Result<T, QgalError>;
