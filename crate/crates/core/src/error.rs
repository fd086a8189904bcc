use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Alliances are nonempty; an empty candidate is a caller bug, not a "no".
    #[error("empty candidate set")]
    EmptyCandidate,

    #[error("compute cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// The source instance cannot be encoded by the requested construction.
    #[error("unrepresentable instance: {0}")]
    Unrepresentable(String),

    #[error("component containing vertex {0} is not a tree")]
    NotATree(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
