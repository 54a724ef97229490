use std::fmt;

/// Why a signature string failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed,
    UnknownEdge,
    Duplicate,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Malformed => f.write_str("malformed token"),
            ParseErrorKind::UnknownEdge => f.write_str("unknown edge"),
            ParseErrorKind::Duplicate => f.write_str("duplicate edge"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("edge distance requires two distinct edges (got edge {0} twice)")]
    IdenticalEdges(usize),

    #[error("cycle count exceeds the configured cap of {cap}")]
    CycleCapExceeded { cap: usize },

    #[error("bitset width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("operands belong to different graphs")]
    GraphMismatch,

    #[error("cycle does not belong to this graph")]
    ForeignCycle,

    #[error("{what} is {actual}, above the supported bound {limit}")]
    SizeBound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{kind} `{token}` at token {index} (byte {offset})")]
    Parse {
        kind: ParseErrorKind,
        token: String,
        index: usize,
        offset: usize,
    },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors caused by a compute budget rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::CycleCapExceeded { .. } | Error::SizeBound { .. })
    }
}
