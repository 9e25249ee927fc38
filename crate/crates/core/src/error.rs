use thiserror::Error;

/// Errors surfaced by the library.
///
/// The CLI maps [`Error::InvalidInput`] and friends to exit code 1,
/// [`Error::BudgetExceeded`] to 2 and [`Error::Invariant`] to 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not hexagonal: {0}")]
    NotHexagonal(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(
        "h-vector mismatch in degree {degree}: counted {counted}, resolution gives {resolved}"
    )]
    HilbertMismatch {
        degree: usize,
        counted: i64,
        resolved: i64,
    },

    #[error("hyperfactorial ratio is not an integer (prime {prime} has exponent {exponent})")]
    NonIntegral { prime: u64, exponent: i64 },

    #[error("budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 2,
            Error::Invariant(_) | Error::HilbertMismatch { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
