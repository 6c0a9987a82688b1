use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse sequence: {0}")]
    Parse(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("entry 1 at position {position} is only allowed as the last entry")]
    MisplacedOne { position: usize },
    #[error("sequence {seq:?} is not admissible: {reason}")]
    InadmissibleSequence { seq: Vec<usize>, reason: String },
    #[error("operation is only defined for cycle algebras")]
    LineUnsupported,
    #[error("module S_{top}^[{len}] does not exist over this algebra")]
    InvalidModule { top: usize, len: usize },
    #[error("module is projective")]
    ProjectiveInput,
    #[error("algebra is self-injective; no retraction is defined")]
    SelfInjectiveInput,
    #[error("algebra has finite global dimension")]
    FiniteGlobalDimension,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("malformed factor list: {0}")]
    InvalidFactorList(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
