use crate::exactlin::LinError;
use crate::structures::CheckReport;

#[derive(Debug, Clone, thiserror::Error)]
pub enum HomError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{what} is singular (rank {rank} of {dim})")]
    Singular { what: String, rank: usize, dim: usize },
    #[error("not a morphism: {0} fails")]
    NotAMorphism(String),
    #[error("precondition failed: {what}")]
    PreconditionFailed { what: String, report: Box<CheckReport> },
    #[error("hypothesis {hypothesis} failed")]
    HypothesisFailed { hypothesis: String, report: Box<CheckReport> },
    #[error("cross-check failed: {what}")]
    CrossCheckFailed { what: String, report: Box<CheckReport> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("index out of range at line {line}: {message}")]
    Range { line: usize, message: String },
    #[error("duplicate entry at line {line}: {message}")]
    DuplicateEntry { line: usize, message: String },
    #[error("{0}")]
    Io(String),
}

impl HomError {
    pub(crate) fn singular(what: impl Into<String>, err: LinError) -> Self {
        match err {
            LinError::Singular { rank, dim } => HomError::Singular { what: what.into(), rank, dim },
            other => HomError::DimensionMismatch(other.to_string()),
        }
    }

    /// The report carried by precondition, hypothesis and cross-check errors.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            HomError::PreconditionFailed { report, .. }
            | HomError::HypothesisFailed { report, .. }
            | HomError::CrossCheckFailed { report, .. } => Some(report),
            _ => None,
        }
    }
}

impl From<LinError> for HomError {
    fn from(err: LinError) -> Self {
        HomError::singular("matrix", err)
    }
}

pub type Result<T, E = HomError> = std::result::Result<T, E>;
