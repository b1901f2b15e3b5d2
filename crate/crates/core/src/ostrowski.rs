//! Base-α expansion of natural numbers against the denominators `q_k`.

use crate::cf::ConvergentTable;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::verdict::{Verdict, ViolationKind};

/// Digits `c_1..c_ℓ` of a base-α expansion, little-endian: `digits()[k-1]`
/// multiplies `q_{k-1}`.
///
/// Expansions built by [`expand_natural`] are canonical and α-admissible.
/// [`AbsExpansion::from_digits`] accepts any digit list so candidates can be
/// evaluated and validated.
#[derive(Debug, Clone)]
pub struct AbsExpansion<'t, T> {
    table: &'t ConvergentTable<T>,
    digits: Vec<u64>,
}

impl<'t, T: Scalar> AbsExpansion<'t, T> {
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

    /// `c_ℓ … c_1`, the order printed in counting tables.
    pub fn big_endian(&self) -> Vec<u64> {
        self.digits.iter().rev().copied().collect()
    }

    pub fn evaluate(&self) -> Result<T> {
        evaluate_abs(self.table, &self.digits)
    }

    pub fn validate(&self) -> Result<Verdict> {
        validate_abs(self.table, &self.digits)
    }
}

impl<T: PartialEq> PartialEq for AbsExpansion<'_, T> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.table, other.table) && self.digits == other.digits
    }
}

/// The unique canonical α-admissible expansion of `n`.
///
/// Repeatedly brackets the remainder as `q_{k−1} ≤ N < q_k`, takes
/// `c_k = ⌊N / q_{k−1}⌋` and continues with `N mod q_{k−1}`. Positions that
/// are skipped hold 0; `n = 0` gives the empty expansion.
pub fn expand_natural<'t, T: Scalar>(table: &'t ConvergentTable<T>, n: &T) -> Result<AbsExpansion<'t, T>> {
    if n.is_negative() {
        return Err(Error::NegativeValue(n.to_string()));
    }
    let mut digits: Vec<u64> = Vec::new();
    let mut rest = n.clone();
    while rest >= T::one() {
        let k = table.bracket(&rest)?;
        let weight = table.shifted(k)?;
        let (c, r) = rest.div_rem(&weight);
        if digits.is_empty() {
            digits.resize(k, 0);
        }
        debug_assert!(r < weight);
        digits[k - 1] = scalar::to_u64(&c)?;
        rest = r;
    }
    Ok(AbsExpansion { table, digits })
}

/// `Σ c_k q_{k−1}` for any digit list, admissible or not.
pub fn evaluate_abs<T: Scalar>(table: &ConvergentTable<T>, digits: &[u64]) -> Result<T> {
    let q = table.denominators(digits.len())?;
    digits
        .iter()
        .zip(&q)
        .try_fold(T::zero(), |acc, (&c, q)| scalar::add(&acc, &scalar::scale(c, q)?))
}

/// Checks canonical form and the α-admissibility conditions
/// `c_1 ≤ a_1 − 1`, `c_k ≤ a_k`, and `c_k = a_k ⇒ c_{k−1} = 0`.
///
/// Reports the violation at the most significant position first.
pub fn validate_abs<T: Scalar>(table: &ConvergentTable<T>, digits: &[u64]) -> Result<Verdict> {
    let ell = digits.len();
    if digits.last() == Some(&0) {
        return Ok(Verdict::at(ViolationKind::TrailingZero, ell));
    }
    for k in (1..=ell).rev() {
        let a = table.partial_quotient(k)?;
        let c = digits[k - 1];
        if c > a {
            return Ok(Verdict::at(ViolationKind::DigitTooLarge, k));
        }
        if k == 1 && c > a - 1 {
            return Ok(Verdict::at(ViolationKind::FirstDigitBound, 1));
        }
        if c == a && k >= 2 && digits[k - 2] != 0 {
            return Ok(Verdict::at(ViolationKind::MarkovViolation, k));
        }
    }
    Ok(Verdict::Admissible)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::verdict::Violation;

    fn table(spec: &str) -> ConvergentTable<BigInt> {
        ConvergentTable::new(spec.parse().unwrap())
    }

    fn expand(t: &ConvergentTable<BigInt>, n: i64) -> Vec<u64> {
        expand_natural(t, &BigInt::from(n)).unwrap().into_digits()
    }

    #[test]
    fn silver_rows() {
        let t = table("silver");
        assert_eq!(expand(&t, 7), vec![0, 1, 1]);
        assert_eq!(expand(&t, 24), vec![0, 0, 0, 2]);
        assert_eq!(expand(&t, 23), vec![1, 0, 2, 1]);
    }

    #[test]
    fn zero_is_vacuous() {
        for spec in ["golden", "silver", "explicit:1"] {
            let t = table(spec);
            let e = expand_natural(&t, &BigInt::from(0)).unwrap();
            assert_eq!(e.ell(), 0);
            assert_eq!(e.evaluate().unwrap(), BigInt::from(0));
        }
    }

    #[test]
    fn golden_zeckendorf() {
        // 33 = 21 + 8 + 3 + 1 over q = 1, 1, 2, 3, 5, 8, 13, 21
        let t = table("golden");
        assert_eq!(expand(&t, 33), vec![0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(expand(&t, 1), vec![0, 1]);
    }

    #[test]
    fn negative_input_rejected() {
        let t = table("silver");
        assert!(matches!(
            expand_natural(&t, &BigInt::from(-1)),
            Err(Error::NegativeValue(_))
        ));
    }

    #[test]
    fn evaluation() {
        let t = table("silver");
        assert_eq!(evaluate_abs(&t, &[0, 1, 1]).unwrap(), BigInt::from(7));
        assert_eq!(evaluate_abs(&t, &[]).unwrap(), BigInt::from(0));
        assert_eq!(evaluate_abs(&t, &[1, 0, 2, 1]).unwrap(), BigInt::from(23));
        // inadmissible strings still evaluate
        assert_eq!(evaluate_abs(&t, &[5, 5]).unwrap(), BigInt::from(15));
    }

    #[test]
    fn validation() {
        let silver = table("silver");
        let golden = table("golden");
        let v = |kind, index| Verdict::Violation(Violation { kind, index });
        assert_eq!(validate_abs(&silver, &[1, 0, 2, 1]).unwrap(), Verdict::Admissible);
        assert_eq!(validate_abs(&silver, &[]).unwrap(), Verdict::Admissible);
        assert_eq!(
            validate_abs(&golden, &[1]).unwrap(),
            v(ViolationKind::FirstDigitBound, 1)
        );
        assert_eq!(
            validate_abs(&silver, &[1, 2, 2]).unwrap(),
            v(ViolationKind::MarkovViolation, 3)
        );
        assert_eq!(
            validate_abs(&silver, &[1, 0]).unwrap(),
            v(ViolationKind::TrailingZero, 2)
        );
        assert_eq!(
            validate_abs(&silver, &[0, 3]).unwrap(),
            v(ViolationKind::DigitTooLarge, 2)
        );
        assert_eq!(
            validate_abs(&silver, &[2]).unwrap(),
            v(ViolationKind::FirstDigitBound, 1)
        );
        assert!(matches!(
            validate_abs(&table("explicit:2"), &[0, 1]),
            Err(Error::QuotientsExhausted { index: 2, .. })
        ));
    }

    #[test]
    fn exhausted_base() {
        // q = 1, 2, 7 for a = 2, 3
        let t = table("explicit:2,3");
        assert_eq!(expand(&t, 5), vec![1, 2]);
        assert_eq!(expand(&t, 6), vec![0, 3]);
        assert!(matches!(
            expand_natural(&t, &BigInt::from(7)),
            Err(Error::QuotientsExhausted { index: 3, .. })
        ));
    }

    #[test]
    fn fixed_width_scalars_agree() {
        let big = table("periodic:1;2,3");
        let small: ConvergentTable<i64> = ConvergentTable::new("periodic:1;2,3".parse().unwrap());
        for n in 0..2000i64 {
            let a = expand_natural(&small, &n).unwrap();
            assert_eq!(a.digits(), expand(&big, n).as_slice());
            assert_eq!(a.evaluate().unwrap(), n);
        }
    }
}
