use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// The variants are grouped by who is at fault: bad input ([`Error::SelfLoop`]
/// through [`Error::Parse`]), a contract the caller must meet
/// ([`Error::Precondition`], [`Error::ListTooSmall`]), an oracle that would
/// need more work than it is allowed ([`Error::ResourceLimit`]), or a broken
/// theorem step ([`Error::Invariant`]), which is always a bug here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("list of vertex {vertex} has {size} colors, at least {required} required")]
    ListTooSmall {
        vertex: usize,
        size: usize,
        required: usize,
    },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("internal invariant violated in {step}: {detail}")]
    Invariant { step: &'static str, detail: String },
}

impl Error {
    pub(crate) fn invariant(step: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            step,
            detail: detail.into(),
        }
    }

    /// True for errors caused by the caller's input rather than by a bug or a
    /// resource cap.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::SelfLoop(_)
                | Error::VertexOutOfRange { .. }
                | Error::InvalidInput(_)
                | Error::Parse { .. }
                | Error::Precondition(_)
                | Error::ListTooSmall { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
