use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidCartanType { family: char, rank: usize },

    #[error("unrecognized Dynkin diagram: {0}")]
    UnrecognizedDiagram(String),

    #[error("root closure did not terminate within {cap} roots")]
    ClosureDiverged { cap: usize },

    #[error("invalid folding: {0}")]
    InvalidFolding(String),

    #[error("catalog corrupt: {0}")]
    CatalogCorrupt(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("label for {algebra} must have {expected} entries, got {found}")]
    LabelLengthMismatch {
        algebra: String,
        expected: usize,
        found: usize,
    },

    #[error("cannot parse label `{text}`: {reason}")]
    LabelParse { text: String, reason: String },

    #[error(
        "label {label} is not enumerated for {algebra}; the remaining orbits of this \
         algebra are only counted by clause, not listed"
    )]
    UnlistedLabel { algebra: String, label: String },

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
