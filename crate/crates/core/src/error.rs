//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("unsupported angular momentum l={0} (only s and p shells are implemented)")]
    UnsupportedShell(u32),

    #[error("coincident nuclei {0} and {1}: nuclear repulsion is singular")]
    CoincidentNuclei(usize, usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid active space: {0}")]
    InvalidActiveSpace(String),

    #[error("operator is not Hermitian: {0}")]
    NonHermitian(String),

    #[error("qubit {0} has X/Y support and cannot be tapered")]
    NotTaperable(usize),

    #[error("{n} qubits exceeds the dense diagonalization bound of {max}")]
    TooManyQubits { n: usize, max: usize },

    #[error("{n} variables exceeds the exhaustive enumeration bound of {max}")]
    TooManyVariables { n: usize, max: usize },

    #[error("copy mapping failed: {0}")]
    Mapping(String),

    #[error("solver returned only zero-norm configurations after {retries} retries")]
    DegenerateRun { retries: usize },

    #[error("no embedding found after {attempts} attempts")]
    NoEmbedding { attempts: usize },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid scan specification: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
