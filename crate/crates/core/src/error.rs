use thiserror::Error;

/// Errors raised anywhere in the workbench.
///
/// The variants line up with the exit-code contract of the `ghw` binary:
/// [`Error::exit_code`] maps each one onto 1, 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field spec mismatch: {0}")]
    SpecMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capacity exceeded: {what} needs {needed}, bound is {bound}")]
    Capacity {
        what: &'static str,
        needed: u128,
        bound: u128,
    },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("invalid classification: {0}")]
    InvalidClassification(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("invalid spec field `{field}`: {message}")]
    Spec { field: String, message: String },
}

impl Error {
    pub(crate) fn capacity(what: &'static str, needed: u128, bound: u128) -> Self {
        Error::Capacity { what, needed, bound }
    }

    pub(crate) fn spec(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Spec {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Process exit code for this error: 3 for capacity, 1 for internal
    /// inconsistencies, 2 for everything caused by a bad request.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity { .. } => 3,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
