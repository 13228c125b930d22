use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("unsupported degree {0} (must be between 1 and {max})", max = crate::perm::MAX_DEGREE)]
    UnsupportedDegree(usize),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0} is not in the double-transposition class")]
    NotInClass(String),

    #[error("{0} is not in the kernel of the covering")]
    NotInKernel(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid reduction: {0}")]
    InvalidReduction(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
