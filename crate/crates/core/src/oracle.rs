//! Exhaustive enumeration of admissible digit strings.
//!
//! Independently of the expansion algorithms, every canonical admissible
//! string up to a length bound is generated and evaluated. Existence and
//! uniqueness then reduce to checking that the values are distinct and fill
//! an interval.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::alt_ostrowski::expand_integer;
use crate::cf::ConvergentTable;
use crate::error::{Error, Result};
use crate::ostrowski::expand_natural;
use crate::scalar::{self, Scalar};

/// Default cap on the number of enumerated sequences.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Base α: naturals against `q_k`.
    #[serde(rename = "abs")]
    Absolute,
    /// Base −α: integers against `q*_k`.
    #[serde(rename = "alt")]
    Alternating,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Absolute => "abs",
            Kind::Alternating => "alt",
        })
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "abs" | "absolute" => Ok(Kind::Absolute),
            "alt" | "alternating" => Ok(Kind::Alternating),
            other => Err(format!("unknown kind `{other}` (expected abs or alt)")),
        }
    }
}

/// Every canonical admissible string with at most `max_len` digits, grouped
/// by the value it evaluates to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport<T> {
    pub base: String,
    pub kind: Kind,
    pub max_len: usize,
    /// value → little-endian digit strings, each list in enumeration order
    pub entries: BTreeMap<T, Vec<Vec<u64>>>,
    /// Total number of strings enumerated.
    pub sequences: u64,
}

impl<T: Scalar> OracleReport<T> {
    /// Smallest and largest value reached.
    pub fn interval(&self) -> Option<(T, T)> {
        let (lo, _) = self.entries.first_key_value()?;
        let (hi, _) = self.entries.last_key_value()?;
        Some((lo.clone(), hi.clone()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            value: String,
            digits_le: Vec<Vec<u64>>,
        }
        #[derive(Serialize)]
        struct Report<'a> {
            base: &'a str,
            kind: Kind,
            max_len: usize,
            sequences: u64,
            interval: Option<[String; 2]>,
            entries: Vec<Entry>,
        }
        let report = Report {
            base: &self.base,
            kind: self.kind,
            max_len: self.max_len,
            sequences: self.sequences,
            interval: self.interval().map(|(lo, hi)| [lo.to_string(), hi.to_string()]),
            entries: self
                .entries
                .iter()
                .map(|(v, seqs)| Entry {
                    value: v.to_string(),
                    digits_le: seqs.clone(),
                })
                .collect(),
        };
        serde_json::to_value(report).expect("report serializes")
    }
}

pub fn enumerate_admissible<T: Scalar>(
    table: &ConvergentTable<T>,
    kind: Kind,
    max_len: usize,
) -> Result<OracleReport<T>> {
    enumerate_admissible_with_budget(table, kind, max_len, DEFAULT_BUDGET)
}

/// Depth-first over digit positions, most significant first, pruning with the
/// Markov condition as each digit is chosen.
pub fn enumerate_admissible_with_budget<T: Scalar>(
    table: &ConvergentTable<T>,
    kind: Kind,
    max_len: usize,
    budget: u64,
) -> Result<OracleReport<T>> {
    let quotients = (1..=max_len)
        .map(|k| table.partial_quotient(k))
        .collect::<Result<Vec<_>>>()?;
    let weights = match kind {
        Kind::Absolute => table.denominators(max_len)?,
        Kind::Alternating => table.signed_denominators(max_len)?,
    };

    let mut walk = Walk {
        kind,
        quotients: &quotients,
        weights: &weights,
        budget,
        digits: Vec::with_capacity(max_len),
        entries: BTreeMap::new(),
        sequences: 0,
    };
    walk.emit(T::zero())?;
    for ell in 1..=max_len {
        walk.digits.clear();
        walk.digits.resize(ell, 0);
        walk.descend(ell, ell, T::zero())?;
    }

    Ok(OracleReport {
        base: table.source().to_string(),
        kind,
        max_len,
        entries: walk.entries,
        sequences: walk.sequences,
    })
}

struct Walk<'a, T> {
    kind: Kind,
    quotients: &'a [u64],
    weights: &'a [T],
    budget: u64,
    digits: Vec<u64>,
    entries: BTreeMap<T, Vec<Vec<u64>>>,
    sequences: u64,
}

impl<T: Scalar> Walk<'_, T> {
    /// Chooses the digit at 1-based position `k` of a string of length `ell`.
    fn descend(&mut self, ell: usize, k: usize, partial: T) -> Result<()> {
        if k == 0 {
            return self.emit(partial);
        }
        let a = self.quotients[k - 1];
        let above = (k < ell).then(|| (self.digits[k], self.quotients[k]));
        let max = match self.kind {
            Kind::Absolute => {
                let mut max = if k == 1 { a - 1 } else { a };
                // c_{k+1} = a_{k+1} forces c_k = 0
                if matches!(above, Some((c, a_up)) if c == a_up) {
                    max = 0;
                }
                max
            }
            Kind::Alternating => {
                // b_k = a_k forces b_{k+1} = 0
                if matches!(above, Some((b, _)) if b != 0) {
                    a - 1
                } else {
                    a
                }
            }
        };
        let min = u64::from(k == ell);
        if k == ell && max == 0 {
            return Ok(());
        }
        for d in min..=max {
            self.digits[k - 1] = d;
            let value = scalar::add(&partial, &scalar::scale(d, &self.weights[k - 1])?)?;
            self.descend(ell, k - 1, value)?;
        }
        self.digits[k - 1] = 0;
        Ok(())
    }

    fn emit(&mut self, value: T) -> Result<()> {
        self.sequences += 1;
        if self.sequences > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        self.entries.entry(value).or_default().push(self.digits.clone());
        Ok(())
    }
}

/// Result of checking existence and uniqueness on a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckVerdict<T> {
    /// Values are pairwise distinct and fill `[min, max]`.
    Holds { min: T, max: T, count: usize },
    /// A value reached by more than one admissible string.
    NotUnique { value: T, sequences: Vec<Vec<u64>> },
    /// A value inside the covered range that no string reaches.
    Gap { value: T },
}

impl<T> CheckVerdict<T> {
    pub fn holds(&self) -> bool {
        matches!(self, CheckVerdict::Holds { .. })
    }
}

/// Scans values in increasing order and reports the first counterexample.
pub fn check_theorems<T: Scalar>(report: &OracleReport<T>) -> CheckVerdict<T> {
    let mut prev: Option<&T> = None;
    for (value, seqs) in &report.entries {
        if let Some(p) = prev {
            let expected = p.clone() + T::one();
            if *value != expected {
                return CheckVerdict::Gap { value: expected };
            }
        }
        if seqs.len() != 1 {
            return CheckVerdict::NotUnique {
                value: value.clone(),
                sequences: seqs.clone(),
            };
        }
        prev = Some(value);
    }
    match report.interval() {
        Some((min, max)) => CheckVerdict::Holds {
            min,
            max,
            count: report.entries.len(),
        },
        None => CheckVerdict::Gap { value: T::zero() },
    }
}

/// A value whose algorithmic expansion differs from the enumerated string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<T> {
    pub value: T,
    pub enumerated: Vec<u64>,
    pub expanded: Vec<u64>,
}

/// Expands every value of the report with the matching algorithm and compares
/// digit for digit against the first enumerated string.
pub fn cross_check<T: Scalar>(report: &OracleReport<T>, table: &ConvergentTable<T>) -> Result<Option<Mismatch<T>>> {
    for (value, seqs) in &report.entries {
        let expanded = match report.kind {
            Kind::Absolute => expand_natural(table, value)?.into_digits(),
            Kind::Alternating => expand_integer(table, value)?.into_digits(),
        };
        if expanded != seqs[0] {
            return Ok(Some(Mismatch {
                value: value.clone(),
                enumerated: seqs[0].clone(),
                expanded,
            }));
        }
    }
    Ok(None)
}
