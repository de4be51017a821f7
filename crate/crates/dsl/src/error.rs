use thiserror::Error;

use crate::ast::Span;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DslError {
    #[error("{span}: syntax error: {message}")]
    Syntax { span: Span, message: String },

    #[error("{span}: type error: {message}")]
    Type { span: Span, message: String },

    #[error("{span}: truncation degree mismatch: {left} vs {right}")]
    DegreeMismatch { span: Span, left: usize, right: usize },

    #[error("{span}: polarity error at {node} `{formula}`: {message}")]
    Polarity { span: Span, node: &'static str, formula: String, message: String },

    #[error("{span}: evaluation error: {source}")]
    Eval {
        span: Span,
        #[source]
        source: weakll_core::Error,
    },

    #[error("input `{name}`: {message}")]
    Binding { name: String, message: String },
}

impl DslError {
    pub fn span(&self) -> Option<Span> {
        match self {
            DslError::Syntax { span, .. }
            | DslError::Type { span, .. }
            | DslError::DegreeMismatch { span, .. }
            | DslError::Polarity { span, .. }
            | DslError::Eval { span, .. } => Some(*span),
            DslError::Binding { .. } => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, DslError>;

pub(crate) fn type_error<T>(span: Span, message: impl Into<String>) -> Result<T> {
    Err(DslError::Type { span, message: message.into() })
}
