use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Exhaustive enumeration would exceed the configured work budget.
    #[error("enumeration of {cost} weighted word evaluations exceeds the budget of {budget} (set ABELWORDS_BUDGET to raise it)")]
    Budget { cost: u128, budget: u128 },

    /// A guaranteed construction failed; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
