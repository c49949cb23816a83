use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad symbol index, invalid state, parse failure.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },

    /// A configurable size cap was exceeded (subset states, monoid elements, ...).
    #[error("resource cap exceeded: {what} exceeds {cap}")]
    Resource { what: &'static str, cap: usize },

    #[error("construction misuse: {0}")]
    ConstructionMisuse(String),

    #[error("no decomposition of alpha={alpha} for n={n}")]
    Decomposition { n: u32, alpha: u64 },

    #[error("(n={n}, alpha={alpha}) outside {interval}")]
    OutOfRange { n: u32, alpha: u64, interval: String },

    #[error("alpha={alpha} is not representable for n={n}: {reason}")]
    NotRepresentable { n: u32, alpha: u64, reason: String },

    /// Exhaustive search requested beyond what is tractable.
    #[error("feasibility guard: {0}")]
    Feasibility(String),

    #[error("not constructively supported: {0}")]
    NotSupported(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
