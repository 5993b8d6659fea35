use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {ambient} variables")]
    IndexOutOfRange { index: usize, ambient: usize },

    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("improper ideal: {0}")]
    ImproperIdeal(&'static str),

    #[error("ideal is not square-free")]
    NotSquareFree,

    #[error("not primary: variable x{variable} has no pure power among the generators")]
    NotPrimary { variable: usize },

    #[error("monomial {0} lies in the ideal")]
    MemberOfIdeal(String),

    #[error("isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("unbounded: coordinates {0:?} are not covered by any upper-bound row")]
    Unbounded(Vec<usize>),

    #[error("no integral vertex")]
    NoIntegralVertex,

    #[error("no supporting facet")]
    NoSupportingFacet,

    #[error("scan budget exceeded: {points} lattice points requested, limit is {limit}")]
    BudgetExceeded { points: u128, limit: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant breach: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::BudgetExceeded { .. } => 4,
            Error::Invariant(_) => 5,
            Error::Io(_) => 1,
            _ => 3,
        }
    }

    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
