use thiserror::Error;

/// Errors reported by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} {value} out of range (expected {expected})")]
    Range {
        what: &'static str,
        value: usize,
        expected: String,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("expected a binary alphabet, found {distinct} distinct symbols")]
    Alphabet { distinct: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
