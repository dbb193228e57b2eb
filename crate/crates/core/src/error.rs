use thiserror::Error;

/// Errors raised by diagram construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("arc label {label} occurs {count} time(s), expected exactly 2")]
    Label { label: u32, count: usize },

    #[error("diagram is not connected")]
    DisconnectedDiagram,

    #[error("operation requires at least one crossing")]
    NoCrossings,

    #[error("checkerboard coloring contradiction at face {face}")]
    ColoringContradiction { face: usize },

    #[error("crossing index {index} out of range for a diagram with {len} crossings")]
    Index { index: usize, len: usize },

    #[error("state has {got} choices but the diagram has {expected} crossings")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what} needs {requested}, above the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("over/under constraints are contradictory at crossing {crossing}")]
    ConstraintContradiction { crossing: usize },

    #[error("invalid pretzel parameters: {0}")]
    Spec(String),

    #[error("polynomial coefficient overflowed i64")]
    CoefficientOverflow,

    #[error("span of the zero polynomial is undefined")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, Error>;
