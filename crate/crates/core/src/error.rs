use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every module of the crate.
///
/// The CLI maps these onto exit codes through [`Error::is_arithmetic`]:
/// arithmetic impossibilities exit with 3, everything else with 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("invalid Legendrian unknot (tb={tb}, rot={rot}): {condition}")]
    InvalidLegendrian {
        tb: i64,
        rot: i64,
        condition: &'static str,
    },

    #[error("unsupported framing: coefficient {0} is not an integer")]
    UnsupportedFraming(String),

    #[error("invalid continued fraction expansion: {0}")]
    InvalidExpansion(String),

    #[error("contact 0-surgery has no (±1)-surgery presentation")]
    ZeroSurgery,

    #[error("non-integral invariant {name} = {value}")]
    NonIntegralInvariant { name: &'static str, value: String },

    #[error("gate rejected diagram: {0}")]
    GateRejection(String),
}

impl Error {
    /// True for failures of the arithmetic itself rather than of the input.
    pub fn is_arithmetic(&self) -> bool {
        matches!(
            self,
            Error::SingularMatrix | Error::NonIntegralInvariant { .. }
        )
    }
}
