use thiserror::Error;

/// Errors raised by the evaluators and verification engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A real argument lies outside the domain of the operation.
    #[error("{op}: argument {value} is outside the domain ({expected})")]
    Domain {
        op: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// A complex argument lies on the cut (-inf, 0].
    #[error("{op}: {re}{im:+}i lies on the branch cut (-inf, 0]")]
    OnCut { op: &'static str, re: f64, im: f64 },

    /// A quadrature could not reach its requested error budget.
    #[error("quadrature budget not met: achieved bound {achieved:e}, requested {requested:e}")]
    BudgetNotMet { achieved: f64, requested: f64 },

    /// A configuration parameter is malformed (empty grid, bad order, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(op: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        op,
        value,
        expected,
    }
}
