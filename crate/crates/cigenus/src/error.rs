use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input (bad degree counts, `n < 3`, `d = 0`, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested hypersurface degree `m` admits no admissible profile.
    #[error("infeasible m = {m}: {reason}{}", feasible_hint(*.smallest_feasible))]
    Infeasible {
        m: u64,
        reason: String,
        smallest_feasible: Option<u64>,
    },

    /// An enumeration oracle would exceed its work budget.
    #[error("enumeration budget exceeded: {needed} candidates > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// A self-check that can only fail on a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn feasible_hint(m: Option<u64>) -> String {
    match m {
        Some(m) => format!(" (smallest feasible m is {m})"),
        None => " (no feasible m exists for this instance)".to_string(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
