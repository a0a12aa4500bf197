//! Contact (±1)-surgery presentations of surgeries on Legendrian unknots,
//! post-surgery classical invariants via exact linking-matrix algebra, and a
//! screen for contact analogues of the first Kirby move.
//!
//! The algebra in [`exact`] and the presentation machinery are generic over
//! the integer type ([`exact::ExactInt`]); the aliases below fix the
//! arbitrary-precision instantiation used by the CLI and the reports.

pub mod cli;
pub mod error;
pub mod exact;
pub mod kirby;
pub mod legendrian;
pub mod presentation;
pub mod transform;

pub use error::{Error, Result};
pub use exact::{ExactInt, Matrix};
pub use legendrian::{ExternalKnot, FramingCurve, LegendrianUnknot, Sign};

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact reduced fraction over [`Int`].
pub type Rational = num_rational::Ratio<Int>;
pub type IntMatrix = exact::Matrix<Int>;
pub type RationalMatrix = exact::Matrix<Rational>;
pub type IntVector = Vec<Int>;
pub type CfExpansion = presentation::CfExpansion<Int>;
pub type Presentation = presentation::Presentation<Int>;

/// Machine-word instantiations, exact as long as nothing overflows.
pub type Rational64 = num_rational::Ratio<i64>;
pub type IntMatrix64 = exact::Matrix<i64>;
pub type RationalMatrix64 = exact::Matrix<Rational64>;
