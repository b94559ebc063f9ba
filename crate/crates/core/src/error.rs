use alloc::string::String;

use crate::symbolic::VarId;

/// Errors raised by the exact computations.
///
/// Property violations are never errors: the checkers return reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by an expression that is identically zero")]
    DivisionByZero,
    #[error("evaluation failed: {0}")]
    Eval(String),
    #[error("no value assigned to {0}")]
    MissingAssignment(VarId),
    #[error("matrix is not in the open cell B⁻U: leading principal minor {0} vanishes")]
    Cell(usize),
    #[error("expression is not subtraction-free: {0}")]
    Positivity(String),
    #[error("vertex budget of {0} exceeded before closure")]
    BudgetExceeded(usize),
    #[error("graph structure: {0}")]
    Structure(String),
    #[error("degenerate point: {0}")]
    Degenerate(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("positivity assumption violated: {0}")]
    PositivityAssumption(String),
}

pub type Result<T> = core::result::Result<T, Error>;
