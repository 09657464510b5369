use thiserror::Error;

/// Errors raised by the graph, spectral, search and verification layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph order {0} outside supported range 1..=64")]
    InvalidOrder(usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("no sign change of polynomial on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource guard: {0}")]
    Infeasible(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
