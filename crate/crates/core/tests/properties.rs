use std::collections::HashSet;

use ap_partition::count::{self, count_even_below, count_odd_below, Rational};
use ap_partition::enumerate::{self, expand, partition_for};
use ap_partition::kcore::{self, divisor_set, k_divides, k_product, k_quotient, Parity};
use ap_partition::oracle;
use proptest::prelude::*;

proptest! {
    #[test]
    fn two_arithmetic_is_the_usual_product(m in -50i64..=50, n in -50i64..=50) {
        prop_assert_eq!(k_product(m, n, 2).unwrap(), m * n);
    }

    #[test]
    fn quotient_then_product_round_trips(a in -500i64..=500, b in 1i64..=50, k in -10i64..=10) {
        if let Some(c) = k_quotient(a, b, k).unwrap() {
            prop_assert_eq!(k_product(c, b, k).unwrap(), a);
        }
    }

    #[test]
    fn product_is_the_sum_of_terms(m in -20i64..=20, n in 1i64..=40, k in -20i64..=20) {
        let start = m - n + 1;
        let explicit: i64 = (0..n).map(|i| start + i * k).sum();
        prop_assert_eq!(k_product(m, n, k).unwrap(), explicit);
    }

    #[test]
    fn quotient_finds_any_anchor_that_works(a in -300i64..=300, b in 1i64..=30, k in -6i64..=6) {
        // brute-force search over a window of anchors
        if let Some(c) = (-400i64..=400).find(|&c| k_product(c, b, k).unwrap() == a) {
            prop_assert_eq!(k_quotient(a, b, k).unwrap(), Some(c));
        }
    }

    #[test]
    fn even_count_matches_loop(p in 1u64..=400, q in 1u64..=400) {
        let x = Rational::new(p, q).unwrap();
        let direct = (1..=p).filter(|j| j % 2 == 0 && j * q < p).count() as u64;
        prop_assert_eq!(count_even_below(x), direct);
    }

    #[test]
    fn odd_count_matches_loop(p in 1u64..=400, q in 1u64..=400) {
        let x = Rational::new(p, q).unwrap();
        let direct = (1..=p).filter(|j| j % 2 == 1 && j * q < p).count() as u64;
        prop_assert_eq!(count_odd_below(x), direct);
    }

    #[test]
    fn enumerated_partitions_are_found_again_by_partition_for(n in 1u64..=3000) {
        for p in enumerate::enumerate_ap(n).unwrap() {
            prop_assert_eq!(partition_for(n, p.length(), p.diff()).unwrap(), Some(p));
        }
    }

    #[test]
    fn partition_for_only_returns_members(n in 1u64..=400, d in 1u64..=40, k in 0u64..=60) {
        let members = enumerate::enumerate_ap(n).unwrap();
        match partition_for(n, d, k).unwrap() {
            Some(p) => prop_assert!(members.contains(&p)),
            None => prop_assert!(!members.iter().any(|p| p.length() == d && p.diff() == k)),
        }
    }
}

#[test]
fn divisibility_follows_the_divisor_sets() {
    for n in 1..=1000u64 {
        let odd = divisor_set(n, Parity::Odd).unwrap();
        let even = divisor_set(n, Parity::Even).unwrap();
        for d in 1..=2 * n {
            let (di, ni) = (d as i64, n as i64);
            for k in [1, 3, 5] {
                assert_eq!(
                    k_divides(di, ni, k).unwrap(),
                    odd.contains(d),
                    "n={n} d={d} k={k}"
                );
            }
            for k in [0, 2, 4] {
                assert_eq!(
                    k_divides(di, ni, k).unwrap(),
                    n % d == 0,
                    "n={n} d={d} k={k}"
                );
                assert_eq!(even.contains(d), n % d == 0);
            }
        }
    }
}

#[test]
fn odd_divisor_sets_are_twice_the_odd_divisors_and_half_even() {
    for n in 1..=1000u64 {
        let set = divisor_set(n, Parity::Odd).unwrap();
        let tau = count::tau_triple(n).unwrap();
        assert_eq!(set.len() as u64, 2 * tau.tau_odd);
        assert_eq!(count::dk_cardinality(n, 7).unwrap(), set.len() as u64);
        assert_eq!(count::dk_cardinality(n, -4).unwrap(), tau.tau);
        let evens = set.iter().filter(|d| d % 2 == 0).count();
        assert_eq!(2 * evens, set.len(), "n = {n}");
        assert_eq!(set.as_slice()[0], 1);
        assert!(set.as_slice().windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn divisor_sets_match_definition() {
    for n in 1..=500u64 {
        let expected: Vec<u64> = (1..=2 * n)
            .filter(|d| (2 * n) % d == 0 && !(d % 2 == 0 && n % d == 0))
            .collect();
        assert_eq!(
            divisor_set(n, Parity::Odd).unwrap().as_slice(),
            expected.as_slice()
        );
        assert_eq!(
            divisor_set(n, Parity::Even).unwrap().into_vec(),
            kcore::divisors(n)
        );
    }
}

#[test]
fn enumeration_is_valid_unique_and_counted() {
    for n in 1..=2000u64 {
        let all = enumerate::enumerate_ap(n).unwrap();
        let mut seen = HashSet::new();
        for p in &all {
            let parts = expand(p).unwrap();
            assert_eq!(parts.iter().sum::<u64>(), n);
            assert!(parts[0] >= 1);
            assert!(parts.windows(2).all(|w| w[1] - w[0] == p.diff()));
            assert!(seen.insert(parts), "duplicate in AP({n})");
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]), "AP({n}) out of order");
        assert_eq!(all.len() as u64, count::ap_count(n).unwrap().total);
        assert_eq!(
            enumerate::ap_lengths(n).unwrap().len() as u64,
            count::apdiv_count(n).unwrap()
        );
    }
}

#[test]
fn formula_matches_oracle_on_a_sample() {
    for n in (1..=5000u64).step_by(97) {
        assert_eq!(
            count::ap_count(n).unwrap().total,
            oracle::brute_count(n).unwrap(),
            "n = {n}"
        );
    }
}
