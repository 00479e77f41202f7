use thiserror::Error;

/// Errors raised by the constructions and experiments in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet size {0} is out of range (need 3 <= k <= {max})", max = crate::group::MAX_PEGS)]
    InvalidAlphabet(usize),

    #[error("letter {letter} is not in the alphabet of size {k}")]
    InvalidLetter { letter: usize, k: usize },

    #[error("transposition ({0}, {1}) needs two distinct letters")]
    InvalidTransposition(usize, usize),

    #[error("{what} needs {requested} units but the budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        requested: u128,
        budget: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("spectrum dimensions differ: {numeric} vs {closed}")]
    DimensionMismatch { numeric: u64, closed: u64 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
