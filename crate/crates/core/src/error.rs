use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which resource limit a Gröbner computation ran into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BudgetKind {
    PairReductions { limit: u64 },
    Timeout { limit: Duration },
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetKind::PairReductions { limit } => write!(f, "more than {limit} pair reductions"),
            BudgetKind::Timeout { limit } => write!(f, "timeout of {:.1}s", limit.as_secs_f64()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("expected {expected} entries, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("ideal is the unit ideal (empty variety)")]
    UnitIdeal,

    #[error("point does not lie on the variety")]
    PointNotOnVariety,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    Budget(BudgetKind),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
