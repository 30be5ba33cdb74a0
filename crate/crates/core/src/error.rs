use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("strategy {strategy} is not applicable to carrier `{algebra}`")]
    IncompatibleStrategy { algebra: String, strategy: String },

    #[error("value {value} outside the admissible range {range}")]
    Domain { value: String, range: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("subsets belong to universes of different sizes ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },

    #[error("universe size {n} exceeds the exhaustive limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
