//! Outcome of checking a digit string against an admissibility rule.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// The most significant digit is 0, so the string is not canonical.
    TrailingZero,
    /// The digit at the index exceeds a_k.
    DigitTooLarge,
    /// c_1 > a_1 − 1 in the absolute system.
    FirstDigitBound,
    /// A digit equal to a_k has a nonzero neighbour on the constrained side.
    MarkovViolation,
}

/// The first broken rule, found scanning from the most significant digit down.
/// `index` is the 1-based digit position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Admissible,
    Violation(Violation),
}

impl Verdict {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Verdict::Admissible)
    }

    pub(crate) fn at(kind: ViolationKind, index: usize) -> Self {
        Verdict::Violation(Violation { kind, index })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Admissible => f.write_str("admissible"),
            Verdict::Violation(v) => write!(f, "{:?} at k={}", v.kind, v.index),
        }
    }
}
