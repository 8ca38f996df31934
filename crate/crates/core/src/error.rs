use thiserror::Error;

use crate::gauss::{ChordId, Role};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("malformed token `{0}` (expected O<id><sign> or U<id><sign>)")]
    MalformedToken(String),
    #[error("chord {0} has two {1:?} endpoints")]
    DuplicateRole(ChordId, Role),
    #[error("chord {0} is missing its partner endpoint")]
    MissingPartner(ChordId),
    #[error("the two endpoints of chord {0} carry different signs")]
    SignMismatch(ChordId),
    #[error("chord {0} has no sign")]
    MissingSign(ChordId),
    #[error("sign given for chord {0} which has no endpoints")]
    UnusedSign(ChordId),
    #[error("chord id 0 is not allowed")]
    ZeroChordId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("chord {0} is not in the diagram")]
    UnknownChord(ChordId),
    #[error("endpoint does not occur in the diagram")]
    UnknownEndpoint,
    #[error("the 0-writhe is not a knot invariant; read WritheVector::non_invariant_j0 instead")]
    ZeroWrithe,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move does not match the diagram: {0}")]
    SiteMismatch(String),
    #[error("k must be at least 1")]
    InvalidK,
    #[error("position {pos} is out of range for a circle of length {len}")]
    OutOfRange { pos: usize, len: usize },
    #[error("a Xi-move needs at least 3 endpoints")]
    TooFewEndpoints,
    #[error("cannot parse move line `{line}`: {reason}")]
    Syntax { line: String, reason: String },
    #[error("script line {line}: {source}")]
    Script { line: usize, source: Box<MoveError> },
    #[error("move {step} of the script failed: {source}")]
    Replay { step: usize, source: Box<MoveError> },
}

impl MoveError {
    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        MoveError::SiteMismatch(msg.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("k must be a positive integer")]
    InvalidK,
    #[error("a must be a positive integer")]
    InvalidA,
    #[error("budget values must be positive")]
    InvalidBudget,
}
