use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("{what}: n = {n} exceeds the supported cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("alpha = {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable (worst row-sum deviation {0:e})")]
    NotEquitable(f64),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("input is not a {{1,3}}-tree")]
    NotThirteenTree,

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("exhaustive enumeration is unavailable for n = {0}")]
    EnumerationUnavailable(usize),

    #[error("report i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
