use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Power iteration hit its iteration cap before the bound gap closed.
    #[error("power iteration did not converge after {iterations} iterations (bounds [{lower}, {upper}])")]
    ConvergenceFailure {
        /// Last lower bound on the spectral radius.
        lower: f64,
        /// Last upper bound on the spectral radius.
        upper: f64,
        /// Iterations performed.
        iterations: usize,
    },

    /// A bracketed root search could not start or finish.
    #[error("root solver failed on bracket [{lo}, {hi}]: {reason}")]
    SolverFailure {
        /// Left end of the bracket.
        lo: f64,
        /// Right end of the bracket.
        hi: f64,
        /// What went wrong.
        reason: String,
    },

    /// An exhaustive sweep would exceed the configured number of solves.
    #[error("sweep needs {needed} spectral solves, cap is {cap}")]
    CapExceeded {
        /// Number of solves the sweep would need.
        needed: usize,
        /// Configured cap.
        cap: usize,
    },
}

/// Library result alias.
pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
