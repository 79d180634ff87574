use thiserror::Error;

/// Errors surfaced by the algebra kernel.
///
/// Budget overruns are ordinary, recoverable outcomes: callers translate them
/// into "skip" verdicts instead of wrong answers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("budget exceeded: {what} limit {limit}")]
    Budget { what: &'static str, limit: u64 },

    #[error("ideal is improper (contains a unit)")]
    ImproperIdeal,

    #[error("generator is not a difference of two unit monomials: {0}")]
    NonBinomial(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("unassigned variable {0} in evaluation")]
    Unassigned(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("io: {0}")]
    Io(std::io::Error),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error is a budget overrun rather than a hard failure.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
