use thiserror::Error;

/// Errors raised by the fuzzy arithmetic, credibility and TOPSIS layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("triangular fuzzy number must satisfy l <= m <= u, got ({l}, {m}, {u})")]
    OrderingViolation { l: f64, m: f64, u: f64 },

    #[error("multiplication requires nonnegative operands (lower bound {lower} < 0)")]
    NegativeOperand { lower: f64 },

    #[error("division requires a strictly positive divisor, got ({l}, {m}, {u})")]
    DivisorNotPositive { l: f64, m: f64, u: f64 },

    #[error("scalar multiplier must be positive, got {0}")]
    NonPositiveScalar(f64),

    #[error("quadrature tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("quadrature did not reach tolerance {tolerance:e} (estimated error {estimate:e})")]
    QuadratureFailure { tolerance: f64, estimate: f64 },

    #[error("unknown linguistic term `{0}`")]
    UnknownTerm(String),

    #[error("aggregation requires positive modes, got {0}")]
    NonPositiveMode(f64),

    #[error("no ratings to aggregate")]
    EmptyRatings,

    #[error("cell ({alternative}, {criterion}): {source}")]
    AtCell {
        alternative: String,
        criterion: String,
        #[source]
        source: Box<Error>,
    },

    #[error("criterion {criterion}: normalization would divide by a non-positive value")]
    ZeroDivisor { criterion: String },

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// Innermost error, skipping stage and cell wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } | Error::AtCell { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
