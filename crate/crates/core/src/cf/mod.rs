//! Continued-fraction description of the base and its convergent denominators.

mod source;
mod surd;
mod table;

pub use source::PartialQuotientSource;
pub use surd::QuadraticSurd;
pub use table::ConvergentTable;
