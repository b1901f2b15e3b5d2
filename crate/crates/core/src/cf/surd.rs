use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The quadratic irrational `(p + √d) / q`, reduced to (0,1) by dropping its
/// integer part.
///
/// The partial quotients are produced by the exact `(P, Q)` state recurrence
/// and stored as a preperiod followed by a repeating period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    d: u64,
    p: i64,
    q: i64,
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl QuadraticSurd {
    pub fn new(d: u64, p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidSurd("denominator q must be nonzero".into()));
        }
        let root = d.sqrt();
        if root * root == d {
            return Err(Error::InvalidSurd(format!("d = {d} is a perfect square")));
        }
        let (preperiod, period) = periodic_quotients(d, p, q)?;
        Ok(Self {
            d,
            p,
            q,
            preperiod,
            period,
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Quotients a_1.. before the cycle starts.
    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }

    /// The repeating block of partial quotients. Never empty.
    pub fn period(&self) -> &[u64] {
        &self.period
    }

    pub(crate) fn quotient(&self, k: usize) -> u64 {
        let i = k - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "surd:{},{},{}", self.d, self.p, self.q)
    }
}

/// floor((p + √d) / q) for non-square d, exactly.
fn floor_surd(p: &BigInt, root: &BigInt, q: &BigInt) -> BigInt {
    if q.is_positive() {
        (p + root).div_floor(q)
    } else {
        // (p + √d)/q = -(p + √d)/|q| and the quotient is never an integer.
        -((p + root).div_floor(&-q)) - 1
    }
}

fn periodic_quotients(d: u64, p: i64, q: i64) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut d = BigInt::from(d);
    let mut p = BigInt::from(p);
    let mut q = BigInt::from(q);

    // The recurrence needs q | d - p²; scaling by |q| restores it.
    if !(&d - &p * &p).is_multiple_of(&q) {
        let scale = q.abs();
        p *= &scale;
        d *= &scale * &scale;
        q *= &scale;
    }
    let root = d.sqrt();

    // Drop the integer part: the state (p, q) now describes 1/(α - a_0).
    let a0 = floor_surd(&p, &root, &q);
    let step = |p: &BigInt, q: &BigInt, a: &BigInt| {
        let next_p = a * q - p;
        let next_q = (&d - &next_p * &next_p) / q;
        (next_p, next_q)
    };
    (p, q) = step(&p, &q, &a0);

    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = quotients.split_off(start);
            return Ok((quotients, period));
        }
        seen.insert((p.clone(), q.clone()), quotients.len());
        let a = floor_surd(&p, &root, &q);
        if a.is_zero() || a.is_negative() {
            return Err(Error::Invariant(format!("surd recurrence produced quotient {a}")));
        }
        quotients.push(a.to_u64().ok_or(Error::Overflow)?);
        (p, q) = step(&p, &q, &a);
    }
}
