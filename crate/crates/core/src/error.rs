use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("hyperplane {index} has a zero normal vector")]
    ZeroNormal { index: usize },

    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        context: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    #[error("no generic restriction found after {attempts} attempts")]
    GenericityFailure { attempts: usize },

    #[error("rank-2 flat {flat:?} has multiplicity {multiplicity} > 3")]
    MultiplicityTooHigh { flat: Vec<usize>, multiplicity: usize },

    #[error("point lies in a different rank stratum: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("theorem bound violated: {0}")]
    BoundViolation(String),

    #[error("propagation violated at {witness:?}: {detail}")]
    ViolationFound { witness: Vec<String>, detail: String },

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    #[error("arrangement is decomposable (beta_(n-1) = 0)")]
    Decomposable,

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the failure points at bad input rather than at a broken invariant.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::ZeroNormal { .. }
                | Error::DimensionMismatch { .. }
                | Error::NonSquare { .. }
                | Error::OutOfRange { .. }
                | Error::MultiplicityTooHigh { .. }
                | Error::Decomposable
                | Error::Parse(_)
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
