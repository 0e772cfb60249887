use thiserror::Error;

use crate::scalars::FieldDescriptor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {text:?} as a {field} entry: {reason}")]
    Parse {
        text: String,
        field: String,
        reason: String,
    },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid field descriptor: {0}")]
    InvalidField(String),

    #[error("shape mismatch in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("vectors are linearly dependent")]
    DependentBasis,

    #[error("matrix is singular")]
    Singular,

    #[error("spectrum does not split over {0}")]
    NotSplit(String),

    #[error("spectrum is not simple: {0}")]
    NotSimple(String),

    #[error("supplied eigenvalues are invalid: {0}")]
    BadEigenvalues(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("not orthonormal: {0}")]
    NotOrthonormal(String),

    #[error("not unitary: {0}")]
    NotUnitary(String),

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Shape {
            op,
            detail: detail.into(),
        }
    }
}
