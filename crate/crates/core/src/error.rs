use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// [`Error::is_domain`] separates bad input (the caller can fix it) from
/// computational failures (a tolerance could not be met).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("range error: {0}")]
    Range(String),

    #[error("series not converged after {terms} terms (last term magnitude {last_term:e})")]
    Accuracy { terms: usize, last_term: f64 },

    #[error(
        "quadrature not converged: value {value:e}, error estimate {error_estimate:e} \
         after {evaluations} evaluations"
    )]
    Quadrature {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error(
        "bracket {index} ({lambda_lo}, {lambda_hi}) holds {found} sign changes of the \
         characteristic function, expected 2"
    )]
    Bracket {
        index: usize,
        lambda_lo: f64,
        lambda_hi: f64,
        found: usize,
        /// `(λ, E_{2α,2}(-λ))` samples taken while scanning the bracket.
        samples: Vec<(f64, f64)>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by arguments outside an operation's domain.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Pole(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
