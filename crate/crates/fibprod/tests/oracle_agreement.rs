//! Cross-checks between the independent computation routes: engine vs the
//! two oracles, pruned vs unpruned enumeration, and the per-subinterval
//! structure of the nonzero counts.

use fibprod::fibonacci::{self, FibIndex};
use fibprod::{density, engine, oracle};

fn ix(n: u32) -> FibIndex {
    FibIndex::new(n).unwrap()
}

/// Unpruned reference enumeration: plain subset search over all Fibonacci
/// values <= m, independent of the pruned search under test.
fn subset_count_by_parity(m: u64) -> (u64, u64) {
    let mut values = Vec::new();
    let mut n = 2u32;
    loop {
        let f = fibonacci::fib_u64(ix(n)).unwrap();
        if f > m {
            break;
        }
        values.push(f);
        n += 1;
    }
    let (mut even, mut odd) = (0u64, 0u64);
    for mask in 0u64..(1 << values.len()) {
        let sum: u64 = values
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &f)| f)
            .sum();
        if sum == m {
            if mask.count_ones() % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    (even, odd)
}

#[test]
fn pruned_search_matches_unpruned_subsets() {
    for m in 0..=300u64 {
        let t = oracle::tally(m);
        assert_eq!((t.r_even, t.r_odd), subset_count_by_parity(m), "m = {m}");
    }
}

#[test]
fn engine_matches_bruteforce_to_500() {
    for m in 0..=500u64 {
        assert_eq!(
            engine::a_fast_u64(m),
            oracle::a_bruteforce(m).unwrap(),
            "m = {m}"
        );
    }
}

#[test]
fn engine_matches_product_to_2000() {
    let series = oracle::product_series(2000);
    let streamed = engine::stream(2000);
    for m in 0..=2000u64 {
        assert_eq!(series.get(m), streamed.get(m), "stream disagrees at {m}");
        assert_eq!(
            series.get(m).unwrap(),
            engine::a_fast_u64(m),
            "a_fast disagrees at {m}"
        );
    }
}

#[test]
fn bruteforce_matches_product_to_2000() {
    let series = oracle::product_series(2000);
    for m in 0..=2000u64 {
        assert_eq!(
            series.get(m).unwrap(),
            oracle::a_bruteforce(m).unwrap(),
            "m = {m}"
        );
    }
}

#[test]
fn subinterval_nonzero_counts_decompose() {
    // Nonzeros in [F_n, F_{n+1}) split as (alpha_{n-3} - 1, 0, alpha_{n-3}).
    let records = density::alpha_recurrence(ix(25));
    let alpha = |n: u32| {
        u64::try_from(
            records
                .iter()
                .find(|r| r.n.get() == n)
                .unwrap()
                .alpha
                .clone(),
        )
        .unwrap()
    };
    let top = fibonacci::fib_u64(ix(26)).unwrap() - 1;
    let support = engine::support(top);
    for n in 5..=25u32 {
        let d = engine::decompose(ix(n)).unwrap();
        let count_in = |lo: u64, hi: u64| support.iter().filter(|&&m| m >= lo && m <= hi).count() as u64;
        let in_sub1 = match d.sub1() {
            Some((lo, hi)) => count_in(
                u64::try_from(lo.clone()).unwrap(),
                u64::try_from(hi.clone()).unwrap(),
            ),
            None => 0,
        };
        let in_sub2 = count_in(
            u64::try_from(d.sub2().0.clone()).unwrap(),
            u64::try_from(d.sub2().1.clone()).unwrap(),
        );
        let in_sub3 = count_in(
            u64::try_from(d.sub3().0.clone()).unwrap(),
            u64::try_from(d.sub3().1.clone()).unwrap(),
        );
        assert_eq!(in_sub1, alpha(n - 3) - 1, "sub1 at n = {n}");
        assert_eq!(in_sub2, 0, "sub2 at n = {n}");
        assert_eq!(in_sub3, alpha(n - 3), "sub3 at n = {n}");
    }
}

#[test]
fn case_relations_hold_on_every_subinterval() {
    for n in 5..=25u32 {
        let d = engine::decompose(ix(n)).unwrap();
        let sign = if n % 2 == 0 { -1i8 } else { 1 };
        let f_n = fibonacci::fib_u64(ix(n)).unwrap();
        let f_n2 = fibonacci::fib_u64(ix(n - 2)).unwrap();
        let f_n3 = fibonacci::fib_u64(ix(n - 3)).unwrap();
        if let Some((lo, hi)) = d.sub1() {
            let (lo, hi) = (
                u64::try_from(lo.clone()).unwrap(),
                u64::try_from(hi.clone()).unwrap(),
            );
            for m in lo..=hi {
                let reflected = f_n + f_n3 - 2 - m;
                assert_eq!(
                    engine::a_fast_u64(m).value(),
                    sign * engine::a_fast_u64(reflected).value(),
                    "reflection at n = {n}, m = {m}"
                );
            }
        }
        let (lo, hi) = (
            u64::try_from(d.sub2().0.clone()).unwrap(),
            u64::try_from(d.sub2().1.clone()).unwrap(),
        );
        for m in lo..=hi {
            assert!(engine::a_fast_u64(m).is_zero(), "zero case at n = {n}, m = {m}");
        }
        let (lo, hi) = (
            u64::try_from(d.sub3().0.clone()).unwrap(),
            u64::try_from(d.sub3().1.clone()).unwrap(),
        );
        for m in lo..=hi {
            assert_eq!(
                engine::a_fast_u64(m),
                engine::a_fast_u64(m - f_n - f_n2),
                "shift at n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn proof_harness_passes_through_n15() {
    use fibprod::proofs::{verify_proposition, PropositionPart};
    for n in 5..=15u32 {
        for part in [
            PropositionPart::Reflection,
            PropositionPart::Vanishing,
            PropositionPart::Shift,
        ] {
            let report = verify_proposition(part, ix(n)).unwrap();
            assert!(report.passed(), "part {part} at n = {n}:\n{report}");
        }
    }
}
