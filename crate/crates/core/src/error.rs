use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("instance too large: {what} is {size}, limit {limit}")]
    InstanceTooLarge {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    #[error("graph is not connected")]
    NotConnected,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("minimum degree {actual} is below the required {required}")]
    MinDegreeTooLow { required: String, actual: usize },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("blow-up too large: {size} {what} exceeds cap {cap}")]
    BlowupTooLarge {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag, used in reports and the FFI layer.
    #[must_use]
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGraph(_) => "invalid_graph",
            Error::Parse { .. } => "parse_error",
            Error::InstanceTooLarge { .. } => "instance_too_large",
            Error::NotConnected => "not_connected",
            Error::PreconditionViolated(_) => "precondition_violated",
            Error::ConstructionFailed(_) => "construction_failed",
            Error::MinDegreeTooLow { .. } => "min_degree_too_low",
            Error::InternalContradiction(_) => "internal_contradiction",
            Error::InfeasibleParameters(_) => "infeasible_parameters",
            Error::BlowupTooLarge { .. } => "blowup_too_large",
            Error::Io(_) => "io_error",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
