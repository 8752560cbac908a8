use thiserror::Error;

/// Errors raised by the geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid line: coefficients a and b are both zero")]
    InvalidLine,
    #[error("all four lines pass through a single point")]
    AllConcurrent,
    #[error("all four lines are parallel")]
    AllParallel,
    #[error("invalid configuration: lines C and D are parallel")]
    InvalidConfig,
    #[error("value is not in the image: {0}")]
    NotInImage(String),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("line pair {0} is parallel")]
    ParallelPair(&'static str),
    #[error("numerical rank error: {0}")]
    RankError(String),
    #[error("zero vector has no projective meaning")]
    ZeroVector,
    #[error("empty input")]
    EmptyInput,
}

pub type Result<T> = std::result::Result<T, Error>;
