use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid scalar literal `{0}`")]
    ParseScalar(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("truncation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} requires truncation degree at least {min}, got {found}")]
    DegreeTooSmall { what: &'static str, min: usize, found: usize },

    #[error("oracle is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: usize },

    #[error("matrix is singular")]
    Singular,
}

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch { expected: expected.to_string(), found: found.to_string() }
    }
}
