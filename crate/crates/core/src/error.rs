use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpexError {
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices: {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph is disconnected ({components} components); compute per component")]
    Disconnected { components: usize },

    #[error("power iteration did not converge after {iters} iterations (residual {residual:e})")]
    NoConvergence { iters: usize, residual: f64 },

    #[error("graph is not planar")]
    NotPlanar,

    #[error("cycle search budget of {budget} nodes exhausted at length {ell}")]
    BudgetExhausted { ell: usize, budget: u64 },
}

pub type Result<T> = std::result::Result<T, SpexError>;

pub(crate) fn arg_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(SpexError::Argument(msg.into()))
}
