use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("score at index {0} is not finite")]
    InvalidScore(usize),
    #[error("no samples for the requested class")]
    MissingClass,
    #[error("argument {0} is outside the function domain")]
    DomainError(f64),
    #[error("class priors are degenerate (pi_p = 0)")]
    DegeneratePriors,
    #[error("leakage density is unavailable for step-function curves")]
    DensityUnavailable,
    #[error("precision is undefined when nothing is predicted positive")]
    UndefinedPrecision,
    #[error("score at index {0} is not a probability in [0, 1]")]
    NotAProbability(usize),
    #[error("admission cap {0} is infeasible")]
    InfeasibleCap(f64),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("candidate set is empty")]
    EmptyCandidateSet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Variant name, used in diagnostics that must name the originating error.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyDataset => "EmptyDataset",
            Error::InvalidScore(_) => "InvalidScore",
            Error::MissingClass => "MissingClass",
            Error::DomainError(_) => "DomainError",
            Error::DegeneratePriors => "DegeneratePriors",
            Error::DensityUnavailable => "DensityUnavailable",
            Error::UndefinedPrecision => "UndefinedPrecision",
            Error::NotAProbability(_) => "NotAProbability",
            Error::InfeasibleCap(_) => "InfeasibleCap",
            Error::NumericalFailure(_) => "NumericalFailure",
            Error::EmptyCandidateSet => "EmptyCandidateSet",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Parse { .. } => "Parse",
        }
    }
}
