//! Crate-wide error type for the mathematical layer.
//!
//! Workspace file handling has its own error type
//! ([`crate::workspace::WorkspaceError`]) because its failure modes are about
//! input files, not mathematics.

use crate::topology::ValidationReport;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A context was built with an empty universe.
    #[error("the universe must contain at least one point")]
    EmptyUniverse,

    /// A context was built with an empty parameter list.
    #[error("the parameter list must contain at least one parameter")]
    EmptyParameters,

    /// A context label (point or parameter) appears twice.
    #[error("duplicate label `{0}` in context")]
    DuplicateLabel(String),

    /// Operands live over different contexts; they cannot be combined.
    #[error("operands belong to different contexts")]
    ContextMismatch,

    /// A carrier for a constant soft set or a subspace is empty.
    #[error("the carrier must be a non-empty subset of the universe")]
    EmptyCarrier,

    /// An operation that folds a family of soft sets received no sets.
    #[error("the family of soft sets must be non-empty")]
    EmptyFamily,

    /// An exhaustive construction would materialise too many sets.
    #[error("{what} over {cells} cells exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        cells: usize,
        limit: usize,
    },

    /// An enumeration exceeded the configured budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A point index outside the universe.
    #[error("point index {0} is out of range")]
    InvalidPoint(usize),

    /// A parameter index outside the parameter list.
    #[error("parameter index {0} is out of range")]
    InvalidParameter(usize),

    /// A family handed to a topology constructor fails the axioms.
    #[error("family is not a soft topology: {0}")]
    InvalidTopology(Box<ValidationReport>),

    /// The proposition registry has no entry with the requested name.
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
}
