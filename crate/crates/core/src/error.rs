use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid argument or out-of-range vertex index.
    #[error("input error: {0}")]
    Input(String),

    /// Malformed graph6 record or edge-list text.
    #[error("parse error at {location}: {message}")]
    Parse { location: ParseLocation, message: String },

    /// The requested graph is too large for exhaustive enumeration.
    #[error("capacity error: n = {n} exceeds the enumeration limit of {limit}; use the sampling estimator instead")]
    Capacity { n: usize, limit: usize },

    /// A structural requirement on a graph does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseLocation {
    Byte(usize),
    Line(usize),
}

impl std::fmt::Display for ParseLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseLocation::Byte(b) => write!(f, "byte offset {b}"),
            ParseLocation::Line(l) => write!(f, "line {l}"),
        }
    }
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn at_byte(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { location: ParseLocation::Byte(offset), message: msg.into() }
    }

    pub(crate) fn at_line(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { location: ParseLocation::Line(line), message: msg.into() }
    }
}
