use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe size {0} is outside the supported range 2..=63")]
    UniverseSize(usize),
    #[error("element {element} is outside the universe [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: usize, right: usize },
    #[error("invalid indices: {0}")]
    InvalidIndices(String),
    #[error("family is not uniform")]
    NotUniform,
    #[error("family is not {0}-union")]
    NotUnion(usize),
    #[error("isomorphism search supports n <= {limit}, got {n}")]
    IsoLimit { n: usize, limit: usize },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("instance too large for this engine: {0}")]
    Infeasible(String),
    #[error("engine `{engine}` cannot solve `{kind}`: {why}")]
    Engine { engine: &'static str, kind: &'static str, why: &'static str },
    #[error("search cancelled after {elapsed_ms} ms")]
    Timeout { elapsed_ms: u128 },
}
