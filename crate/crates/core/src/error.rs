use thiserror::Error;

/// Errors raised by word construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid index must be at least 2, got {0}")]
    InvalidIndex(u32),

    /// `position` is the letter offset within the word.
    #[error("letter {position} is out of range for the braid index")]
    OutOfRangeLetter { position: usize },

    #[error("braid index mismatch: B_{left} vs B_{right}")]
    IndexMismatch { left: u16, right: u16 },

    #[error("handle reduction exceeded {step_limit} steps")]
    NonTermination { step_limit: usize },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
