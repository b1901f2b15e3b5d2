//! Base-(−α) expansion of arbitrary integers against the signed
//! denominators `q*_k = (−1)^k q_k`.

use crate::cf::ConvergentTable;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::verdict::{Verdict, ViolationKind};

/// Digits `b_1..b_ℓ` of a base-(−α) expansion, little-endian: `digits()[k-1]`
/// multiplies `q*_{k-1}`.
#[derive(Debug, Clone)]
pub struct AltExpansion<'t, T> {
    table: &'t ConvergentTable<T>,
    digits: Vec<u64>,
}

impl<'t, T: Scalar> AltExpansion<'t, T> {
    pub fn from_digits(table: &'t ConvergentTable<T>, digits: Vec<u64>) -> Self {
        Self { table, digits }
    }

    pub fn table(&self) -> &'t ConvergentTable<T> {
        self.table
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u64> {
        self.digits
    }

    pub fn ell(&self) -> usize {
        self.digits.len()
    }

    pub fn big_endian(&self) -> Vec<u64> {
        self.digits.iter().rev().copied().collect()
    }

    pub fn evaluate(&self) -> Result<T> {
        evaluate_alt(self.table, &self.digits)
    }

    pub fn validate(&self) -> Result<Verdict> {
        validate_alt(self.table, &self.digits)
    }

    /// `(Z⁺, Z⁻)` with `evaluate() = Z⁺ − Z⁻`.
    pub fn split_parts(&self) -> Result<(T, T)> {
        split_parts(self.table, &self.digits)
    }
}

impl<T: PartialEq> PartialEq for AltExpansion<'_, T> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.table, other.table) && self.digits == other.digits
    }
}

/// One pass of the expansion loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltStep<T> {
    /// Remainder entering the step.
    pub z: T,
    /// `n'` with `q_{n'−1} < |z| + [z < 0] ≤ q_{n'}`.
    pub n_prime: usize,
    /// Position written, `n' ` or `n' + 1`, odd exactly when `z > 0`.
    pub n: usize,
    /// `⌊|z| / q_{n−1}⌋` when `n = n'`.
    pub floor_digit: Option<u64>,
    pub digit: u64,
    /// `z − digit · q*_{n−1}`.
    pub next: T,
}

/// The unique canonical (−α)-admissible expansion of `z`.
pub fn expand_integer<'t, T: Scalar>(table: &'t ConvergentTable<T>, z: &T) -> Result<AltExpansion<'t, T>> {
    let digits = run(table, z, |_| {})?;
    Ok(AltExpansion { table, digits })
}

/// [`expand_integer`] that also returns every loop step, for auditing.
pub fn expand_integer_traced<'t, T: Scalar>(
    table: &'t ConvergentTable<T>,
    z: &T,
) -> Result<(AltExpansion<'t, T>, Vec<AltStep<T>>)> {
    let mut steps = Vec::new();
    let digits = run(table, z, |s| steps.push(s))?;
    Ok((AltExpansion { table, digits }, steps))
}

fn indicator(b: bool) -> u64 {
    u64::from(b)
}

fn run<T: Scalar>(table: &ConvergentTable<T>, z: &T, mut record: impl FnMut(AltStep<T>)) -> Result<Vec<u64>> {
    let mut digits: Vec<u64> = Vec::new();
    let mut written: Vec<bool> = Vec::new();
    let mut zm = z.clone();

    while !zm.is_zero() {
        let magnitude = zm.abs();
        let shifted_mag = scalar::add(&magnitude, &scalar::from_u64(indicator(zm.is_negative()))?)?;
        let n_prime = table.upper_bracket(&shifted_mag)?;
        // (−1)^{n−1} z > 0  ⇔  n is odd exactly when z > 0
        let n = if (n_prime % 2 == 1) == zm.is_positive() {
            n_prime
        } else {
            n_prime + 1
        };
        if n == 0 {
            return Err(Error::Invariant(format!("position 0 selected for remainder {zm}")));
        }
        let weight = table.shifted(n)?;
        let signed_weight = table.signed_denominator(n as isize - 1)?;

        let (digit, floor_digit) = if n == n_prime {
            let floor = magnitude.div_floor(&weight);
            let rest = scalar::sub(&zm, &scalar::mul(&floor, &signed_weight)?)?;
            let lhs = scalar::add(&rest.abs(), &scalar::from_u64(indicator(rest.is_negative()))?)?;
            let floor = scalar::to_u64(&floor)?;
            if lhs > table.shifted(n - 1)? {
                (floor + 1, Some(floor))
            } else {
                (floor, Some(floor))
            }
        } else {
            (1, None)
        };

        let next = scalar::sub(&zm, &scalar::scale(digit, &signed_weight)?)?;
        if next.abs() > weight {
            return Err(Error::Invariant(format!(
                "|Z_(m+1)| = |{next}| exceeds q_{} = {weight}",
                n - 1
            )));
        }

        if digits.is_empty() {
            digits.resize(n, 0);
            written.resize(n, false);
        } else if n > digits.len() {
            return Err(Error::Invariant(format!(
                "position {n} above the leading position {}",
                digits.len()
            )));
        }
        if written[n - 1] {
            return Err(Error::Invariant(format!("position {n} written twice")));
        }
        written[n - 1] = true;
        digits[n - 1] = digit;

        record(AltStep {
            z: zm,
            n_prime,
            n,
            floor_digit,
            digit,
            next: next.clone(),
        });
        zm = next;
    }

    // b_1 absorbs the final remainder, which the loop guard leaves at 0.
    if let Some(b1) = digits.first_mut() {
        *b1 += scalar::to_u64(&zm)?;
    }
    Ok(digits)
}

/// `Σ b_k q*_{k−1}` for any digit list.
pub fn evaluate_alt<T: Scalar>(table: &ConvergentTable<T>, digits: &[u64]) -> Result<T> {
    let q = table.signed_denominators(digits.len())?;
    digits
        .iter()
        .zip(&q)
        .try_fold(T::zero(), |acc, (&b, q)| scalar::add(&acc, &scalar::scale(b, q)?))
}

/// Checks canonical form, `b_k ≤ a_k`, and `b_k = a_k ⇒ b_{k+1} = 0`.
///
/// The top digit has no successor, so it may equal a_ℓ.
pub fn validate_alt<T: Scalar>(table: &ConvergentTable<T>, digits: &[u64]) -> Result<Verdict> {
    let ell = digits.len();
    if digits.last() == Some(&0) {
        return Ok(Verdict::at(ViolationKind::TrailingZero, ell));
    }
    for k in (1..=ell).rev() {
        let a = table.partial_quotient(k)?;
        let b = digits[k - 1];
        if b > a {
            return Ok(Verdict::at(ViolationKind::DigitTooLarge, k));
        }
        if b == a && k < ell && digits[k] != 0 {
            return Ok(Verdict::at(ViolationKind::MarkovViolation, k));
        }
    }
    Ok(Verdict::Admissible)
}

/// Splits a digit list into its positive part `Σ b_{2j+1} q_{2j}` and negative
/// part `Σ b_{2j} q_{2j−1}`, both natural numbers.
pub fn split_parts<T: Scalar>(table: &ConvergentTable<T>, digits: &[u64]) -> Result<(T, T)> {
    let q = table.denominators(digits.len())?;
    let mut positive = T::zero();
    let mut negative = T::zero();
    for (i, (&b, q)) in digits.iter().zip(&q).enumerate() {
        let term = scalar::scale(b, q)?;
        // i = k − 1, so odd positions k sit at even i
        if i % 2 == 0 {
            positive = scalar::add(&positive, &term)?;
        } else {
            negative = scalar::add(&negative, &term)?;
        }
    }
    Ok((positive, negative))
}
