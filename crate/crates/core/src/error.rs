//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, {cols} cols")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix entries must be integers for this operation")]
    NonIntegerMatrix,
    #[error("level {ell} out of range for dimension {n}")]
    LevelOutOfRange { ell: usize, n: usize },
    #[error("rank {rank} out of range: {count} subsets")]
    RankOutOfRange { rank: usize, count: usize },
    #[error("subset has {got} elements, expected {want}")]
    WrongCardinality { got: usize, want: usize },
    #[error("subset is not contained in [{n}]")]
    NotASubset { n: usize },
    #[error("Johnson distance requires equal-size sets ({a} vs {b})")]
    UnequalCardinalities { a: usize, b: usize },
    #[error("parameter {name}={value} out of range")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("zeon elements live in different ambient dimensions ({a} vs {b})")]
    AmbientMismatch { a: usize, b: usize },
    #[error("series does not terminate: first parameter {a} must be a nonpositive integer")]
    NonTerminatingSeries { a: i64 },
    #[error("sequence has {len} entries, need {need}")]
    SequenceTooShort { len: usize, need: usize },
    #[error("enumeration bound exceeded: n={n} > {bound}")]
    EnumerationBound { n: usize, bound: usize },
    #[error("group closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("not a permutation of [{n}]")]
    InvalidPermutation { n: usize },
    #[error("expansion coefficients coincide; Johnson basis cannot be recovered")]
    CoincidentCoefficients,
    #[error("result has a non-integer coefficient; no exact integer polynomial exists")]
    NonIntegralResult,
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
