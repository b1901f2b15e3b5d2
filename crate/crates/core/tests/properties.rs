mod common;

use std::collections::BTreeMap;

use common::{big, reference_denominators, table};
use num_traits::Signed;
use ostra::alt_ostrowski::{evaluate_alt, split_parts, validate_alt};
use ostra::oracle::{enumerate_admissible, Kind};
use ostra::ostrowski::{evaluate_abs, validate_abs};
use ostra::{expand_integer, expand_integer_traced, expand_natural, BigInt, BigTable, PartialQuotientSource};
use proptest::prelude::*;

fn periodic_source() -> impl Strategy<Value = PartialQuotientSource> {
    (
        prop::collection::vec(1u64..=9, 0..=3),
        prop::collection::vec(1u64..=9, 1..=4),
    )
        .prop_map(|(pre, per)| PartialQuotientSource::periodic(pre, per).unwrap())
}

proptest! {
    #[test]
    fn signed_recursion_matches_sign_flip(source in periodic_source()) {
        let t = BigTable::new(source.clone());
        let quotients: Vec<u64> = (1..=30).map(|k| source.partial_quotient(k).unwrap()).collect();
        let reference = reference_denominators(&quotients, 31);
        for k in 0..=30isize {
            let q = t.denominator(k).unwrap();
            prop_assert_eq!(q.clone(), BigInt::from(reference[k as usize]));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(t.signed_denominator(k).unwrap(), q * sign);
        }
    }

    #[test]
    fn bracket_agrees_with_linear_scan(source in periodic_source(), x in 1u64..1_000_000) {
        let t = BigTable::new(source);
        let x = BigInt::from(x);
        let n = t.bracket(&x).unwrap();
        prop_assert!(n >= 1);
        let mut scan = None;
        for k in 1..60usize {
            let lo = t.denominator(k as isize - 1).unwrap();
            let hi = t.denominator(k as isize).unwrap();
            if lo <= x && x < hi {
                prop_assert!(scan.is_none(), "bracket not unique");
                scan = Some(k);
            }
        }
        prop_assert_eq!(Some(n), scan);
    }

    #[test]
    fn natural_round_trip(source in periodic_source(), n in 0u64..10_000_000) {
        let t = BigTable::new(source);
        let e = expand_natural(&t, &BigInt::from(n)).unwrap();
        prop_assert_eq!(e.evaluate().unwrap(), BigInt::from(n));
        prop_assert!(e.validate().unwrap().is_admissible());
    }

    #[test]
    fn greedy_remainders_stay_below_the_divisor(source in periodic_source(), n in 1u64..1_000_000) {
        let t = BigTable::new(source);
        let d = expand_natural(&t, &BigInt::from(n)).unwrap().into_digits();
        for k in 1..=d.len() {
            if d[k - 1] == 0 {
                continue;
            }
            // the remainder left after placing c_k is the value of the lower digits
            let below = evaluate_abs(&t, &d[..k - 1]).unwrap();
            prop_assert!(below < t.denominator(k as isize - 1).unwrap());
        }
    }

    #[test]
    fn integer_round_trip(source in periodic_source(), z in -10_000_000i64..10_000_000) {
        let t = BigTable::new(source);
        let e = expand_integer(&t, &BigInt::from(z)).unwrap();
        prop_assert_eq!(e.evaluate().unwrap(), BigInt::from(z));
        prop_assert!(e.validate().unwrap().is_admissible());
    }

    #[test]
    fn alternating_positions_decrease(source in periodic_source(), z in -1_000_000i64..1_000_000) {
        let t = BigTable::new(source);
        let (_, steps) = expand_integer_traced(&t, &BigInt::from(z)).unwrap();
        for pair in steps.windows(2) {
            prop_assert!(pair[1].n < pair[0].n);
        }
        for s in &steps {
            prop_assert!(s.n >= 1);
            prop_assert!(s.next.abs() <= t.denominator(s.n as isize - 1).unwrap());
        }
    }

    #[test]
    fn split_identity(source in periodic_source(), digits in prop::collection::vec(0u64..20, 0..12)) {
        let t = BigTable::new(source);
        let (pos, neg) = split_parts(&t, &digits).unwrap();
        prop_assert!(!pos.is_negative() && !neg.is_negative());
        prop_assert_eq!(evaluate_alt(&t, &digits).unwrap(), pos - neg);
    }

    #[test]
    fn fixed_width_matches_bigint(source in periodic_source(), z in -1_000_000i64..1_000_000) {
        let big_t = BigTable::new(source.clone());
        let small_t: ostra::Table64 = ostra::ConvergentTable::new(source);
        let a = expand_integer(&big_t, &BigInt::from(z)).unwrap().into_digits();
        let b = expand_integer(&small_t, &z).unwrap().into_digits();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn round_trip_on_desk_range() {
    for spec in ["golden", "silver", "periodic:1;2,3", "surd:3,-1,1", "const:7"] {
        let t = table(spec);
        for n in 0..=10_000i64 {
            let e = expand_natural(&t, &big(n)).unwrap();
            assert_eq!(e.evaluate().unwrap(), big(n), "{spec} {n}");
            assert!(e.validate().unwrap().is_admissible(), "{spec} {n}");
        }
        for z in -10_000..=10_000i64 {
            let (e, _) = expand_integer_traced(&t, &big(z)).unwrap();
            assert_eq!(e.evaluate().unwrap(), big(z), "{spec} {z}");
            assert!(e.validate().unwrap().is_admissible(), "{spec} {z}");
        }
    }
}

#[test]
fn fibonacci_denominators() {
    let t = table("golden");
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(1));
    for k in 0..200isize {
        assert_eq!(t.denominator(k).unwrap(), a);
        (a, b) = (b.clone(), a + b);
    }
}

#[test]
fn surd_periods_found_quickly() {
    let cases = [((2, -1, 1), vec![2]), ((5, -1, 2), vec![1]), ((3, -1, 1), vec![1, 2])];
    for ((d, p, q), period) in cases {
        let src = PartialQuotientSource::surd(d, p, q).unwrap();
        let PartialQuotientSource::QuadraticSurd(s) = &src else {
            unreachable!()
        };
        assert!(s.preperiod().len() + s.period().len() <= 100);
        // a rotation of the expected period, depending on where the cycle is entered
        let doubled = [s.period(), s.period()].concat();
        assert!(
            doubled.windows(period.len()).any(|w| w == period.as_slice()),
            "{src}: {:?}",
            s.period()
        );
        assert_eq!(s.period().len(), period.len());
    }
}

#[test]
fn surd_tables_match_periodic_tables() {
    let surd = table("surd:3,-1,1");
    let periodic = table("periodic:;1,2");
    for k in -1..=60 {
        assert_eq!(surd.denominator(k).unwrap(), periodic.denominator(k).unwrap());
    }
}

/// Every digit vector within the digit bounds, filtered by the validator: a
/// second enumeration that shares nothing with the pruned depth-first walk.
fn filtered_brute_force(t: &BigTable, kind: Kind, max_len: usize) -> BTreeMap<BigInt, Vec<Vec<u64>>> {
    let bounds: Vec<u64> = (1..=max_len).map(|k| t.partial_quotient(k).unwrap()).collect();
    let mut out: BTreeMap<BigInt, Vec<Vec<u64>>> = BTreeMap::new();
    let mut digits = vec![0u64; max_len];
    loop {
        let ell = digits.iter().rposition(|&d| d != 0).map_or(0, |p| p + 1);
        let candidate = &digits[..ell];
        let (ok, value) = match kind {
            Kind::Absolute => (
                validate_abs(t, candidate).unwrap().is_admissible(),
                evaluate_abs(t, candidate).unwrap(),
            ),
            Kind::Alternating => (
                validate_alt(t, candidate).unwrap().is_admissible(),
                evaluate_alt(t, candidate).unwrap(),
            ),
        };
        if ok {
            out.entry(value).or_default().push(candidate.to_vec());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == max_len {
                return out;
            }
            if digits[i] < bounds[i] {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn depth_first_enumeration_matches_filtered_brute_force() {
    for spec in ["golden", "silver", "periodic:1;2,3", "explicit:3,1,2,1,4,1"] {
        let t = table(spec);
        for kind in [Kind::Absolute, Kind::Alternating] {
            let report = enumerate_admissible(&t, kind, 6).unwrap();
            let brute = filtered_brute_force(&t, kind, 6);
            let mut dfs = report.entries.clone();
            dfs.values_mut().for_each(|v| v.sort());
            assert_eq!(dfs, brute, "{spec} {kind}");
        }
    }
}

#[test]
fn enumeration_counts_follow_the_denominator_recurrence() {
    for a in 1..=4u64 {
        let t = table(&format!("const:{a}"));
        let counts: Vec<u64> = (0..=8)
            .map(|len| enumerate_admissible(&t, Kind::Absolute, len).unwrap().sequences)
            .collect();
        for w in counts.windows(3) {
            assert_eq!(w[2], a * w[1] + w[0], "const:{a} {counts:?}");
        }
    }
}

#[test]
fn alternating_bijection_silver() {
    let t = table("silver");
    for (len, lo, hi) in [(4usize, -24i64, 12i64), (5, -24, 24)] {
        let report = enumerate_admissible(&t, Kind::Alternating, len).unwrap();
        assert!(report.entries.values().all(|s| s.len() == 1));
        let (min, max) = report.interval().unwrap();
        assert!(min <= big(lo) && max >= big(hi));
        assert_eq!(BigInt::from(report.entries.len()), &max - &min + 1);
    }
}
