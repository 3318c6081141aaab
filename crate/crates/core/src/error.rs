use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph with {n} vertices exceeds the word budget of {max}")]
    Capacity { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}")]
    Domain(String),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("graph has an isolated vertex")]
    IsolatePresent,
    #[error("graph with {n} vertices exceeds the {what} budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        budget: usize,
    },
    #[error("no connected isolate-free split graph after {0} attempts")]
    ResampleExhausted(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
