//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A hypergeometric series was asked to evaluate but no bound numerator
    /// parameter is a nonpositive integer.
    #[error("series does not terminate: no numerator parameter is a nonpositive integer")]
    NotTerminating,

    /// A bound denominator parameter -m hits zero at term index m+1 <= T,
    /// while numerator terms are still nonzero.
    #[error("denominator Pochhammer vanishes at term {term} before termination index {termination}")]
    PoleBeforeTermination { term: u32, termination: u32 },

    #[error("division by zero")]
    DivisionByZero,

    /// Rational-function evaluation at a zero of the denominator.
    #[error("evaluation at a pole")]
    Pole,

    /// Moment formulas are exact only for nonnegative integer powers here.
    #[error("operation requires a nonnegative integer power, got {0}")]
    NonIntegerPower(String),

    #[error("scenario not supported: {0}")]
    UnsupportedScenario(String),

    /// Closed forms exist only for specific Dyson-index values.
    #[error("no closed form for alpha = {0}")]
    UnsupportedAlpha(String),

    /// The utility framework provides F2 only for small n.
    #[error("F2 model `{label}` is not available at n = {n}")]
    NotAvailable { label: String, n: u32 },

    #[error("no rational function of the requested degrees fits the samples")]
    NoFit,

    #[error("fit is underdetermined: solution space has dimension {0} after reduction")]
    AmbiguousFit(usize),

    /// Float-mode reconstruction failed the precision-doubling agreement test.
    #[error("estimates at {bits} and {twice} bits disagree: {low} vs {high}")]
    PrecisionInsufficient {
        bits: u32,
        twice: u32,
        low: String,
        high: String,
    },

    /// Eigenvalue-density evaluation on the simplex boundary.
    #[error("density undefined at a zero eigenvalue")]
    DomainError,

    /// Adaptive quadrature ran out of cell budget before reaching tolerance.
    #[error("quadrature tolerance {tol:e} not met: estimated error {err:e} after {cells} cells")]
    ToleranceNotMet { tol: f64, err: f64, cells: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
