use thiserror::Error;

/// Errors raised by the library.
///
/// Input problems (bad files, graphs outside the supported class) are kept
/// apart from [`Error::Invariant`], which signals a broken internal guarantee.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is not chordal: induced cycle {hole:?}")]
    NotChordal { hole: Vec<usize> },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },

    #[error("graph has {n} vertices, exhaustive routine supports at most {max}")]
    TooLarge { n: usize, max: usize },

    #[error("family has {size} members, enumeration cap is {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for errors caused by the input rather than by the library.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
