//! Constructions, verification and bounds for q-ary constant-weight codes.

pub mod bounds;
pub mod codes;
pub mod designs;
pub mod error;
pub mod lifting;
pub mod math;

pub use error::{Error, Result};

/// Exact rational in the default scalar.
pub type Rational = num_rational::Ratio<i128>;
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;
/// Bound value and report in the default scalar.
pub type Bound = bounds::BoundValue<i128>;
pub type Report = bounds::BoundReport<i128>;
