use crate::search::LadderEntry;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter violates an operation's precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An input object is malformed or inconsistent with its graph.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A search hit its node or wall-clock budget before finishing.
    ///
    /// Infeasibility claims are proofs, so exhausting a budget is always an
    /// explicit error and never silently reported as "no coloring exists".
    #[error("budget exhausted after {nodes} search nodes")]
    BudgetExhausted {
        nodes: u64,
        /// Ladder rungs already proven infeasible before the budget died.
        infeasible: Vec<LadderEntry>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
