use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhaseError {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iteration hit its term budget before reaching tolerance.
    #[error("{what} did not converge within {limit} terms")]
    Convergence { what: &'static str, limit: usize },

    /// A configuration value violates its invariant.
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl PhaseError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        PhaseError::Domain(msg.into())
    }
}

pub type Result<T, E = PhaseError> = std::result::Result<T, E>;
