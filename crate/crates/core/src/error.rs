use thiserror::Error;

/// Errors raised by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("leaf-count mismatch: plus has {plus} leaves, minus has {minus}")]
    LeafCountMismatch { plus: usize, minus: usize },

    #[error("point {0} lies outside [0, 1]")]
    OutOfUnitInterval(String),

    #[error("graft position {position} out of range for a tree with {leaves} leaves")]
    GraftOutOfRange { position: usize, leaves: usize },

    #[error("graft {step} at position {position} is not composable ({leaves} leaves available)")]
    NotComposable {
        step: usize,
        position: usize,
        leaves: usize,
    },

    #[error("leaf {leaf} out of range 1..={leaves}")]
    LeafOutOfRange { leaf: usize, leaves: usize },

    #[error("pattern must have at least 2 leaves, got {0}")]
    PatternTooSmall(usize),

    #[error("tree {0} is not decomposable over the pattern")]
    NotDecomposable(String),

    #[error("the single-leaf tree has no basic-form prefix")]
    NoBasicPrefix,

    #[error("arity must be at least 2, got {0}")]
    InvalidArity(usize),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("pattern mismatch between grafting-group elements")]
    PatternMismatch,

    #[error("element {0} is not a member of the subgroup")]
    NotAMember(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("input exceeds the supported bound: {0}")]
    BoundExceeded(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
