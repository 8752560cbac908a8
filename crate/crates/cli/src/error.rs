use rectflow::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{kind}: {message}")]
    Core {
        kind: &'static str,
        message: String,
        source: CoreError,
    },
    #[error("malformed config: {0}")]
    Config(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("render: EmptyScene: nothing to draw")]
    EmptyScene,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core {
            kind: kind_name(&e),
            message: e.to_string(),
            source: e,
        }
    }
}

fn kind_name(e: &CoreError) -> &'static str {
    match e {
        CoreError::InvalidLine => "InvalidLine",
        CoreError::AllConcurrent => "AllConcurrent",
        CoreError::AllParallel => "AllParallel",
        CoreError::InvalidConfig => "InvalidConfig",
        CoreError::NotInImage(_) => "NotInImage",
        CoreError::NotApplicable(_) => "NotApplicable",
        CoreError::ParallelPair(_) => "ParallelPair",
        CoreError::RankError(_) => "RankError",
        CoreError::ZeroVector => "ZeroVector",
        CoreError::EmptyInput => "EmptyInput",
    }
}

impl CliError {
    /// 2 for bad input, 3 for numerical failures, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core { source, .. } => match source {
                CoreError::InvalidLine
                | CoreError::AllConcurrent
                | CoreError::AllParallel
                | CoreError::InvalidConfig
                | CoreError::ZeroVector
                | CoreError::EmptyInput => 2,
                _ => 3,
            },
            CliError::Config(_) | CliError::Argument(_) => 2,
            CliError::EmptyScene => 3,
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
