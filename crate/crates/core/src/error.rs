use thiserror::Error;

/// Errors raised by the library. Every variant is an input or precondition
/// failure; internal consistency failures are reported as `Inconsistent`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is decomposable (graph is disconnected)")]
    Decomposable,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("orientation has an oriented cycle")]
    Cyclic,
    #[error("orientation does not match the graph: {0}")]
    OrientationMismatch(String),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vertex set {0} is not a filter")]
    NotAFilter(String),
    #[error("sequence is not (+)-admissible: letter {index} (vertex {vertex}) is not a sink")]
    NotAdmissible { index: usize, vertex: usize },
    #[error("operation requires a nonempty sequence")]
    EmptySequence,
    #[error("invalid multiplicity vector at level {level}: {reason}")]
    InvalidMultiplicities { level: usize, reason: String },
    #[error("sequences live on different base quivers")]
    QuiverMismatch,
    #[error("sequence is not principal")]
    NotPrincipal,
    #[error("sequence is too short: {0}")]
    TooShort(String),
    #[error("sequence is not complete")]
    NotComplete,
    #[error("word is not reduced")]
    NotReduced,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vertex {0} is not a sink")]
    NotASink(usize),
    #[error("vertex {0} is not a source")]
    NotASource(usize),
    #[error("preprojectivity undecided after {0} Coxeter steps")]
    Undecided(usize),
    #[error("sequence does not annihilate the module")]
    NotAnnihilating,
    #[error("no indecomposable projective has dimension vector {0}")]
    NoProjectiveMatch(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
