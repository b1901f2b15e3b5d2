#![allow(dead_code)]

use ostra::{BigInt, BigTable, PartialQuotientSource};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn table(spec: &str) -> BigTable {
    BigTable::new(spec.parse().expect("valid base spec"))
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Bases exercised by the oracle criteria: golden, silver, a mixed periodic
/// base and the a_k = k base.
pub const ORACLE_BASES: [&str; 4] = ["golden", "silver", "periodic:1;2,3", "explicit:1,2,3,4,5,6,7,8,9"];

/// Seeded random periodic bases with quotients in 1..=9.
pub fn random_periodic_bases(count: usize, seed: u64) -> Vec<PartialQuotientSource> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let pre_len = rng.gen_range(0..=3);
            let per_len = rng.gen_range(1..=4);
            let preperiod = (0..pre_len).map(|_| rng.gen_range(1..=9)).collect();
            let period = (0..per_len).map(|_| rng.gen_range(1..=9)).collect();
            PartialQuotientSource::periodic(preperiod, period).unwrap()
        })
        .collect()
}

/// q_0..q_{len-1} by the plain three-term recurrence on u128.
pub fn reference_denominators(quotients: &[u64], len: usize) -> Vec<u128> {
    let (mut prev, mut cur) = (0u128, 1u128);
    let mut out = vec![cur];
    for &a in quotients.iter().take(len.saturating_sub(1)) {
        (prev, cur) = (cur, a as u128 * cur + prev);
        out.push(cur);
    }
    out
}
