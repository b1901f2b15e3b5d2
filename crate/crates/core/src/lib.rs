//! Absolute (base-α) and alternating (base-(−α)) Ostrowski numeration.
//!
//! The irrational base α ∈ (0,1) is never held as a float. It is described by
//! its continued-fraction partial quotients ([`PartialQuotientSource`]), from
//! which a [`ConvergentTable`] lazily materializes the convergent denominators
//! `q_k` and the signed denominators `q*_k = (−1)^k q_k`. Natural numbers
//! expand greedily against `q` ([`ostrowski`]); arbitrary integers expand
//! against `q*` ([`alt_ostrowski`]). The [`oracle`] module enumerates
//! admissible digit strings exhaustively to certify existence and uniqueness
//! on finite ranges.
//!
//! All arithmetic is generic over an exact integer [`Scalar`]. [`BigInt`] is
//! the default; the fixed-width aliases report [`Error::Overflow`] instead of
//! wrapping.

pub mod alt_ostrowski;
pub mod cf;
pub mod cli;
mod error;
pub mod oracle;
pub mod ostrowski;
mod scalar;
pub mod verdict;

pub use alt_ostrowski::{expand_integer, expand_integer_traced, AltExpansion, AltStep};
pub use cf::{ConvergentTable, PartialQuotientSource, QuadraticSurd};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use oracle::{CheckVerdict, Kind, OracleReport};
pub use ostrowski::{expand_natural, AbsExpansion};
pub use scalar::Scalar;
pub use verdict::{Verdict, Violation, ViolationKind};

/// Arbitrary-precision convergent table; the default for all front ends.
pub type BigTable = ConvergentTable<BigInt>;
/// Fixed-width table for small bases and values. Overflow is an error.
pub type Table64 = ConvergentTable<i64>;
pub type Table128 = ConvergentTable<i128>;

pub type BigAbsExpansion<'t> = AbsExpansion<'t, BigInt>;
pub type BigAltExpansion<'t> = AltExpansion<'t, BigInt>;
pub type BigOracleReport = OracleReport<BigInt>;
