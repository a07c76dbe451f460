use thiserror::Error;

/// Errors raised by the library. Every variant is a rejected input; none
/// indicate internal corruption.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagram is not simply laced: {0}")]
    NotSimplyLaced(String),
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("diagram is not of finite type")]
    NotFiniteType,
    #[error("unknown type spec `{0}`")]
    UnknownType(String),
    #[error("expected a vector of length {expected}, got length {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("node {node} is out of range for a rank {rank} diagram")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("oracle out of range: rank {rank} exceeds the limit {limit}")]
    OracleOutOfRange { rank: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a valid character: {0}")]
    NotACharacter(String),
    #[error("outside the multiplicity-free regime: lambda(h_3) = {0}")]
    OutsideMultiplicityFree(u32),
    #[error("connected closure of the support {0} is not of type A")]
    ClosureNotTypeA(String),
    #[error("window {lo}..={hi} does not contain the q-exponent support {min}..={max}")]
    WindowTooSmall { lo: i64, hi: i64, min: i64, max: i64 },
    #[error("malformed s vector: {0}")]
    MalformedS(String),
    #[error("{0} is not an element of A(lambda)")]
    NotInA(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
