use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("`{0} {1}` is not an edge")]
    NotAnEdge(String, String),

    #[error("{{{0}}} is not a facet")]
    NotAFacet(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not a forest; cycle: {}", .cycle.join(" "))]
    NotAForest { cycle: Vec<String> },

    #[error("complex is not a simplicial forest; leafless connected subcomplex: {}", .witness.join(" | "))]
    NotASimplicialForest { witness: Vec<String> },

    #[error("graph has an induced 4-cycle: {}", .cycle.join(" "))]
    InducedFourCycle { cycle: Vec<String> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{what} ({actual}) exceeds the cap of {cap}; raise it with {flag}")]
    ResourceLimit {
        what: &'static str,
        actual: usize,
        cap: usize,
        flag: &'static str,
    },

    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),

    #[error("the zero ideal has no regularity or projective dimension")]
    ZeroIdeal,
}

impl Error {
    /// Short stable identifier used in machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownVertex(_) => "unknown-vertex",
            Error::NotAnEdge(..) => "not-an-edge",
            Error::NotAFacet(_) => "not-a-facet",
            Error::Parse { .. } => "parse",
            Error::InvalidInput(_) => "invalid-input",
            Error::NotAForest { .. } => "not-a-forest",
            Error::NotASimplicialForest { .. } => "not-a-simplicial-forest",
            Error::InducedFourCycle { .. } => "induced-c4",
            Error::Precondition(_) => "precondition",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::BadCharacteristic(_) => "bad-characteristic",
            Error::ZeroIdeal => "zero-ideal",
        }
    }

    /// Whether the error is an input/format problem rather than a violated
    /// mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::InvalidInput(_) | Error::BadCharacteristic(_)
        )
    }
}
