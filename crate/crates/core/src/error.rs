use thiserror::Error;

/// Failures reported by the geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PgaError {
    /// An element of the wrong euclidean/ideal class was passed in, e.g. the
    /// euclidean norm of an ideal point.
    #[error("classification error: {0}")]
    Classification(String),

    /// The arguments are of the right class but the operation is undefined
    /// for them (zero element, intersecting lines given to the parallel-line
    /// distance, non-incident solver inputs, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite coefficient in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, PgaError>;

pub(crate) fn classification<T>(msg: impl Into<String>) -> Result<T> {
    Err(PgaError::Classification(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(PgaError::Domain(msg.into()))
}
