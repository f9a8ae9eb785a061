use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("vector {index} has length {found}, expected {expected}")]
    LengthMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("element {element} is outside the ground set 1..={ground}")]
    ElementOutOfRange { element: usize, ground: usize },

    #[error("ground set of size {found} exceeds the limit {limit}")]
    GroundTooLarge { found: usize, limit: usize },

    #[error("ground sizes differ: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("deleted and contracted sets overlap")]
    OverlappingSets,

    #[error("a hereditary collection needs at least one independent set")]
    EmptyCollection,

    #[error("bases do not form an anti-chain: {0}")]
    NotAntichain(String),

    #[error("columns {0} are not a basis of the column matroid")]
    NotABasis(String),

    #[error("basis {0} is not contained in any circuit")]
    BasisNotInCircuit(String),

    #[error("modulus {0} is not a prime in 2..=97")]
    InvalidModulus(u32),

    #[error("entry {value} is not a residue modulo {modulus}")]
    ResidueOutOfRange { value: u32, modulus: u32 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} is outside 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("boolean matrix expected, found a ghost entry at ({row}, {col})")]
    GhostEntry { row: usize, col: usize },

    #[error("row and column subsets differ in size: {rows} vs {cols}")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("unknown example: {0}")]
    UnknownExample(String),

    #[error("search limits exceeded: {0}")]
    LimitExceeded(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
