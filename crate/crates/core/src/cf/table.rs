use std::fmt;
use std::sync::{PoisonError, RwLock};

use super::source::PartialQuotientSource;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Lazily extended table of convergent denominators `q_k` and signed
/// denominators `q*_k = (−1)^k q_k`, indexed from the sentinel `k = −1`.
///
/// Extension takes a write lock, reads of materialized entries a read lock,
/// so a table can be shared across threads.
pub struct ConvergentTable<T> {
    source: PartialQuotientSource,
    cache: RwLock<Cache<T>>,
}

#[derive(Clone)]
struct Cache<T> {
    /// `quotients[k - 1] = a_k`
    quotients: Vec<u64>,
    /// `q[k + 1] = q_k`
    q: Vec<T>,
    /// `qstar[k + 1] = q*_k`
    qstar: Vec<T>,
}

impl<T: Scalar> ConvergentTable<T> {
    pub fn new(source: PartialQuotientSource) -> Self {
        let cache = Cache {
            quotients: Vec::new(),
            q: vec![T::zero(), T::one()],
            qstar: vec![T::zero(), T::one()],
        };
        Self {
            source,
            cache: RwLock::new(cache),
        }
    }

    pub fn source(&self) -> &PartialQuotientSource {
        &self.source
    }

    /// Largest k with `q_k` materialized.
    pub fn materialized(&self) -> usize {
        self.read(|c| c.q.len() - 2)
    }

    fn read<R>(&self, f: impl FnOnce(&Cache<T>) -> R) -> R {
        let guard = self.cache.read().unwrap_or_else(PoisonError::into_inner);
        f(&guard)
    }

    /// Makes sure `q_k` and `q*_k` exist.
    pub fn materialize(&self, k: usize) -> Result<()> {
        if self.read(|c| c.q.len() > k + 1) {
            return Ok(());
        }
        let mut cache = self.cache.write().unwrap_or_else(PoisonError::into_inner);
        while cache.q.len() <= k + 1 {
            let k = cache.q.len() - 1;
            let a = self.source.partial_quotient(k)?;
            let a_t: T = scalar::from_u64(a)?;
            let n = cache.q.len();

            let q = scalar::add(&scalar::mul(&a_t, &cache.q[n - 1])?, &cache.q[n - 2])?;
            let qstar = scalar::sub(&cache.qstar[n - 2], &scalar::mul(&a_t, &cache.qstar[n - 1])?)?;

            let expected = if k % 2 == 1 { -q.clone() } else { q.clone() };
            if qstar != expected {
                return Err(Error::Invariant(format!(
                    "q*_{k} = {qstar} but (-1)^k q_k = {expected}"
                )));
            }
            cache.quotients.push(a);
            cache.q.push(q);
            cache.qstar.push(qstar);
        }
        Ok(())
    }

    /// a_k for k ≥ 1, cached alongside the denominators.
    pub fn partial_quotient(&self, k: usize) -> Result<u64> {
        assert!(k >= 1, "partial quotients are indexed from 1");
        self.materialize(k)?;
        Ok(self.read(|c| c.quotients[k - 1]))
    }

    /// `q_k` for k ≥ −1.
    ///
    /// # Panics
    ///
    /// If `k < −1`.
    pub fn denominator(&self, k: isize) -> Result<T> {
        self.shifted(offset(k))
    }

    /// `q*_k = (−1)^k q_k` for k ≥ −1, computed by the signed recursion
    /// `q*_k = q*_{k−2} − a_k q*_{k−1}`.
    pub fn signed_denominator(&self, k: isize) -> Result<T> {
        let j = offset(k);
        if j >= 2 {
            self.materialize(j - 1)?;
        }
        Ok(self.read(|c| c.qstar[j].clone()))
    }

    /// `q_{j−1}`, the convenient form for "the denominator below position j".
    pub(crate) fn shifted(&self, j: usize) -> Result<T> {
        if j >= 2 {
            self.materialize(j - 1)?;
        }
        Ok(self.read(|c| c.q[j].clone()))
    }

    /// `q_0, …, q_{len−1}`: the weights of digit positions 1..=len.
    pub fn denominators(&self, len: usize) -> Result<Vec<T>> {
        if len > 0 {
            self.materialize(len - 1)?;
        }
        Ok(self.read(|c| c.q[1..=len].to_vec()))
    }

    /// `q*_0, …, q*_{len−1}`.
    pub fn signed_denominators(&self, len: usize) -> Result<Vec<T>> {
        if len > 0 {
            self.materialize(len - 1)?;
        }
        Ok(self.read(|c| c.qstar[1..=len].to_vec()))
    }

    /// The n ≥ 1 with `q_{n−1} ≤ x < q_n`.
    ///
    /// When `q_0 = q_1 = 1` and `x = 1` this is n = 2, the larger index, so a
    /// greedy step never places a digit at position 1 of a golden-type base.
    ///
    /// # Panics
    ///
    /// If `x < 1`.
    pub fn bracket(&self, x: &T) -> Result<usize> {
        assert!(*x >= T::one(), "bracket requires x >= 1");
        // first n >= 1 with q_n > x
        self.first_index(1, |q| q > x)
    }

    /// The n ≥ 0 with `q_{n−1} < y ≤ q_n`.
    pub(crate) fn upper_bracket(&self, y: &T) -> Result<usize> {
        assert!(*y >= T::one(), "upper bracket requires y >= 1");
        self.first_index(0, |q| q >= y)
    }

    fn first_index(&self, from: usize, pred: impl Fn(&T) -> bool) -> Result<usize> {
        let mut k = from;
        loop {
            let found = self.read(|c| {
                let top = c.q.len() - 2;
                (k..=top).find(|&i| pred(&c.q[i + 1])).ok_or(top + 1)
            });
            match found {
                Ok(n) => return Ok(n),
                Err(next) => {
                    k = next;
                    // q grows at least like the Fibonacci numbers
                    self.materialize(k + 8)
                        .or_else(|e| if self.materialized() >= k { Ok(()) } else { Err(e) })?;
                }
            }
        }
    }
}

fn offset(k: isize) -> usize {
    assert!(k >= -1, "denominators are indexed from -1");
    (k + 1) as usize
}

impl<T: Clone> Clone for ConvergentTable<T> {
    fn clone(&self) -> Self {
        let cache = self.cache.read().unwrap_or_else(PoisonError::into_inner).clone();
        Self {
            source: self.source.clone(),
            cache: RwLock::new(cache),
        }
    }
}

impl<T> fmt::Debug for ConvergentTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let materialized = self.cache.read().map(|c| c.q.len() - 2).unwrap_or(0);
        f.debug_struct("ConvergentTable")
            .field("source", &self.source.to_string())
            .field("materialized", &materialized)
            .finish()
    }
}
