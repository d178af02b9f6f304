use thiserror::Error;

/// Errors raised by the solvers, generators and file parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid election: {0}")]
    InvalidElection(String),
    #[error("invalid committee: {0}")]
    InvalidCommittee(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("committee enumeration needs {needed} committees, cap is {cap}")]
    EnumerationCap { needed: u128, cap: u128 },
    #[error("search space estimate {estimate} exceeds cap {cap}")]
    SearchSpaceCap { estimate: u128, cap: u128 },
    #[error("vote subset enumeration needs {needed} subsets, cap is {cap}")]
    SubsetCap { needed: u128, cap: u128 },
    #[error("integer program search exceeded {cap} nodes")]
    IpNodeCap { cap: u64 },
    #[error("integer program has {count} variables, cap is {cap}")]
    VariableCap { count: usize, cap: usize },
    #[error("scale factor lcm(1..{m}) does not fit in 128 bits")]
    ScaleOverflow { m: usize },
    #[error("algorithm {algorithm} does not apply: {reason}")]
    NotApplicable {
        algorithm: &'static str,
        reason: String,
    },
    #[error("generator precondition failed: {0}")]
    Precondition(String),
    #[error("invalid source witness: {0}")]
    InvalidWitness(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn not_applicable(algorithm: &'static str, reason: impl Into<String>) -> Self {
        Error::NotApplicable {
            algorithm,
            reason: reason.into(),
        }
    }

    /// True for the resource-cap family of errors.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::EnumerationCap { .. }
                | Error::SearchSpaceCap { .. }
                | Error::SubsetCap { .. }
                | Error::IpNodeCap { .. }
                | Error::VariableCap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
