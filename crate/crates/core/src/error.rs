use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The variants fall into three broad classes that the command-line tool maps
/// onto distinct exit codes: validation problems with the input, feasibility
/// guards (an instance is too large for the exact method), and exhausted
/// search budgets.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("empty edge")]
    EmptyEdge,
    #[error("edge of size {size} is below the minimum edge size {min}")]
    EdgeTooSmall { size: usize, min: usize },
    #[error("a hypergraph needs at least one vertex")]
    NoVertices,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("edge of size {size} in a hypergraph declared {r}-uniform")]
    NotUniform { size: usize, r: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("feasibility guard `{guard}`: {detail}")]
    Feasibility { guard: &'static str, detail: String },
    #[error("budget `{budget}` exceeded: {detail}")]
    BudgetExceeded { budget: &'static str, detail: String },
    #[error("stratum inconsistent with target: {0}")]
    StratumMismatch(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("64-bit digest collision detected: {0}")]
    DigestCollision(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Coarse class of the error, used for exit codes and FFI status codes.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Feasibility { .. } => ErrorKind::Feasibility,
            Error::BudgetExceeded { .. } => ErrorKind::Budget,
            Error::Io(_) | Error::Checkpoint(_) | Error::DigestCollision(_) | Error::Invariant(_) => {
                ErrorKind::Internal
            }
            _ => ErrorKind::Validation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Feasibility,
    Budget,
    Internal,
}

impl ErrorKind {
    /// Process exit code: 2 validation, 3 feasibility guard, 4 budget, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Validation => 2,
            ErrorKind::Feasibility => 3,
            ErrorKind::Budget => 4,
            ErrorKind::Internal => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
