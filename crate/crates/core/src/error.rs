use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("{func}: argument {value} outside domain ({expected})")]
    Domain {
        func: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// A series or iteration did not reach the requested accuracy.
    #[error("{func}: no convergence at {at} after {iterations} iterations")]
    Convergence {
        func: &'static str,
        at: f64,
        iterations: usize,
    },

    /// A root could not be bracketed.
    #[error("{func}: could not bracket a root in [{lo}, {hi}]")]
    Bracket { func: &'static str, lo: f64, hi: f64 },

    /// A caller-supplied object violates the operation's precondition.
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        func,
        value,
        expected,
    }
}
