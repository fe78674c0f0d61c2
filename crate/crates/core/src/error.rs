use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("invalid group description: {0}")]
    InvalidGroupJson(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coweight {0:?} is not dominant for the requested group")]
    NotDominant(Vec<i64>),

    #[error("coweight {0:?} is not antidominant")]
    NotAntidominant(Vec<i64>),

    #[error("invalid Levi: {0}")]
    InvalidLevi(String),

    #[error("Weyl group exceeds the cap of {0} elements")]
    WeylGroupTooLarge(usize),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("operands disagree: {0}")]
    Mismatch(String),

    #[error("relation violated: {0}")]
    RelationViolated(String),

    #[error("zero pattern violated: {0}")]
    ZeroPattern(String),

    #[error("missing value for generator {0:?}")]
    MissingGenerator(Vec<i64>),

    #[error("cannot factor {0:?} over the monoid generators")]
    Factorization(Vec<i64>),

    #[error("window caps exceeded: {0}")]
    CapsExceeded(String),

    #[error("precision insufficient: {0}")]
    PrecisionInsufficient(String),

    #[error("invalid field element: {0}")]
    InvalidFieldElement(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
