use thiserror::Error;

/// Every failure the library can report.
///
/// The variants map one-to-one onto the CLI exit codes and the FFI status
/// codes, so new variants must be added in both places.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("precondition failed: h(0) = {h0} is not negative")]
    Precondition { h0: f64 },

    #[error("no sign change in (0, 1): h(0) = {h0}, h(1-) = {h1}")]
    NoRoot { h0: f64, h1: f64 },

    #[error("indeterminate region query at {re} + {im}i: {reason}")]
    Indeterminate { re: f64, im: f64, reason: String },

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    /// Short machine-readable tag used in `ERROR:<kind>` status fields.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parameter(_) => "parameter",
            Error::Domain(_) => "domain",
            Error::Unsupported(_) => "unsupported",
            Error::Precondition { .. } => "precondition",
            Error::NoRoot { .. } => "no-root",
            Error::Indeterminate { .. } => "indeterminate",
            Error::Evaluation(_) => "evaluation",
            Error::NotApplicable(_) => "not-applicable",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
