use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe size {0} is out of range (expected 1..=7)")]
    UniverseSize(usize),
    #[error("element {element} is not in the universe 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("invalid split `{0}` (expected MOD/RES/DEPTH with RES < MOD and DEPTH >= 1)")]
    InvalidSplit(String),
    #[error("inconsistent counts: {0}")]
    InvalidCounts(String),
    #[error("unknown report format `{0}`")]
    UnknownFormat(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
