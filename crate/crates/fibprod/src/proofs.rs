//! Executable versions of the combinatorial maps behind the three-interval
//! recursion, plus exhaustive small-n verification that each map has the
//! claimed domain, parity behavior and bijectivity.
//!
//! The maps:
//!
//! - the *pairing involution* swaps a largest part F_n for the pair
//!   F_{n-1} + F_{n-2} (and back), flipping the parity of the part count;
//! - the *strip map* removes the parts F_n and F_{n-2} from the leftover
//!   partitions, carrying partitions of m bijectively onto partitions of
//!   m - F_n - F_{n-2};
//! - the *complement map* replaces a partition with parts from
//!   {F_2, ..., F_n} by the complementary part-set, realizing
//!   m -> F_{n+2} - 2 - m.
//!
//! Domain violations are rejected, never silently normalized: the point of
//! this module is checking that the domains are exactly as claimed.

use std::collections::HashSet;
use std::fmt;

use crate::fibonacci::{self, FibIndex};
use crate::oracle::{self, FibPartition};
use crate::Error;

/// Which part of the interval recursion to verify.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PropositionPart {
    /// Sub1: reflection with sign (-1)^(n-1), via the complement map.
    Reflection,
    /// Sub2: vanishing coefficients, via the pairing involution.
    Vanishing,
    /// Sub3: shift by F_n + F_{n-2}, via the strip map.
    Shift,
}

impl PropositionPart {
    pub fn from_number(part: u8) -> Option<Self> {
        match part {
            1 => Some(Self::Reflection),
            2 => Some(Self::Vanishing),
            3 => Some(Self::Shift),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::Reflection => 1,
            Self::Vanishing => 2,
            Self::Shift => 3,
        }
    }
}

impl fmt::Display for PropositionPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// A failed check, with the witness degree and what went wrong.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProofFailure {
    pub m: u64,
    pub detail: String,
}

/// Outcome of an exhaustive verification run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProofReport {
    pub part: PropositionPart,
    pub n: FibIndex,
    pub degrees_checked: u64,
    pub partitions_checked: u64,
    pub failures: Vec<ProofFailure>,
}

impl ProofReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ProofReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "part {} at n = {}: {} degrees, {} partitions checked",
            self.part, self.n, self.degrees_checked, self.partitions_checked
        )?;
        if self.passed() {
            write!(f, "PASS")
        } else {
            for fail in &self.failures {
                writeln!(f, "FAIL at m = {}: {}", fail.m, fail.detail)?;
            }
            write!(f, "FAIL ({} failures)", self.failures.len())
        }
    }
}

fn fib_u64(n: u32) -> u64 {
    fibonacci::fib_u64(FibIndex::unchecked(n)).expect("desk-scale index")
}

/// True iff every partition of m has largest index n or n-1, and whenever
/// the largest is n-1 the second largest is n-2. Meaningful for
/// F_n + F_{n-3} - 1 <= m <= F_{n+1} - 1, the range covering the vanishing
/// and shift subintervals.
pub fn largest_part_dichotomy(m: u64, n: FibIndex) -> bool {
    let n = n.get();
    oracle::enumerate_partitions(m).iter().all(|p| {
        match p.largest().map(FibIndex::get) {
            Some(top) if top == n => true,
            Some(top) if top == n - 1 => {
                p.second_largest().map(FibIndex::get) == Some(n - 2)
            }
            _ => false,
        }
    })
}

/// Swap F_n <-> F_{n-1} + F_{n-2}, preserving the value and flipping the
/// parity of the part count. Applying it twice is the identity.
///
/// Domain: largest part F_n with second largest at most F_{n-3}, or largest
/// F_{n-1} with second largest F_{n-2}.
pub fn pairing_involution(p: &FibPartition, n: FibIndex) -> Result<FibPartition, Error> {
    let n = n.get();
    let raw: Vec<u32> = p.indices().iter().map(|i| i.get()).collect();
    match raw.as_slice() {
        [top, rest @ ..] if *top == n && rest.first().is_none_or(|&s| s <= n - 3) => {
            let mut out = vec![n - 1, n - 2];
            out.extend_from_slice(rest);
            FibPartition::from_raw(&out)
        }
        [top, second, rest @ ..] if *top == n - 1 && *second == n - 2 => {
            let mut out = vec![n];
            out.extend_from_slice(rest);
            FibPartition::from_raw(&out)
        }
        _ => Err(Error::MapDomain(format!(
            "pairing at n = {n} needs largest {n} with second <= {} or largest {} with second {}; got {raw:?}",
            n - 3,
            n - 1,
            n - 2
        ))),
    }
}

/// Remove the parts F_n and F_{n-2}. Domain: p contains exactly the indices
/// n and n-2 above n-3. Sends a partition of m to one of m - F_n - F_{n-2},
/// preserving the even/odd classification (the part count drops by 2).
pub fn strip_map(p: &FibPartition, n: FibIndex) -> Result<FibPartition, Error> {
    let n = n.get();
    let raw: Vec<u32> = p.indices().iter().map(|i| i.get()).collect();
    match raw.as_slice() {
        [top, second, rest @ ..]
            if *top == n && *second == n - 2 && rest.first().is_none_or(|&r| r <= n - 3) =>
        {
            FibPartition::from_raw(rest)
        }
        _ => Err(Error::MapDomain(format!(
            "strip at n = {n} needs parts {{{n}, {}}} with the rest <= {}; got {raw:?}",
            n - 2,
            n - 3
        ))),
    }
}

/// Complement within {2, ..., n}: the parts not used by p. Domain: all
/// indices of p lie in [2, n]. Realizes m -> F_{n+2} - 2 - m, and part
/// counts satisfy k + k' = n - 1. An involution.
pub fn complement_map(p: &FibPartition, n: FibIndex) -> Result<FibPartition, Error> {
    let n = n.get();
    if p.largest().map(FibIndex::get).is_some_and(|top| top > n) {
        return Err(Error::MapDomain(format!(
            "complement within {{2..{n}}} got a part above {n}"
        )));
    }
    let used: HashSet<u32> = p.indices().iter().map(|i| i.get()).collect();
    let raw: Vec<u32> = (2..=n).rev().filter(|k| !used.contains(k)).collect();
    FibPartition::from_raw(&raw)
}

/// Exhaustively verify one part of the interval recursion at index n, by
/// enumerating every partition of every degree in the relevant subinterval
/// and checking the full claim: domains, pairings, bijectivity and the
/// resulting coefficient identities. Desk-scale: n up to ~20.
pub fn verify_proposition(part: PropositionPart, n: FibIndex) -> Result<ProofReport, Error> {
    if n.get() < 5 {
        return Err(Error::DecompositionIndex { n: n.get() });
    }
    let mut report = ProofReport {
        part,
        n,
        degrees_checked: 0,
        partitions_checked: 0,
        failures: Vec::new(),
    };
    match part {
        PropositionPart::Vanishing => verify_vanishing(n.get(), &mut report),
        PropositionPart::Shift => verify_shift(n.get(), &mut report),
        PropositionPart::Reflection => verify_reflection(n.get(), &mut report),
    }
    Ok(report)
}

fn fail(report: &mut ProofReport, m: u64, detail: String) {
    report.failures.push(ProofFailure { m, detail });
}

/// Check that the involution pairs `pairable` into parity-opposite couples
/// drawn from `universe`. Returns the number of pairings made.
fn check_pairing(
    n: u32,
    m: u64,
    pairable: &[FibPartition],
    universe: &HashSet<FibPartition>,
    report: &mut ProofReport,
) {
    for p in pairable {
        let image = match pairing_involution(p, FibIndex::unchecked(n)) {
            Ok(q) => q,
            Err(e) => {
                fail(report, m, format!("involution rejected {p:?}: {e}"));
                continue;
            }
        };
        if !universe.contains(&image) {
            fail(report, m, format!("involution image {image:?} is not a partition of {m}"));
            continue;
        }
        if image.is_even() == p.is_even() {
            fail(report, m, format!("involution kept parity of {p:?}"));
        }
        if image.value_u64() != m {
            fail(report, m, format!("involution changed the value of {p:?}"));
        }
        match pairing_involution(&image, FibIndex::unchecked(n)) {
            Ok(back) if back == *p => {}
            _ => fail(report, m, format!("involution not self-inverse on {p:?}")),
        }
    }
}

fn verify_vanishing(n: u32, report: &mut ProofReport) {
    let lo = fib_u64(n) + fib_u64(n - 3) - 1;
    let hi = fib_u64(n) + fib_u64(n - 2) - 1;
    for m in lo..=hi {
        report.degrees_checked += 1;
        let parts = oracle::enumerate_partitions(m);
        report.partitions_checked += parts.len() as u64;
        if !largest_part_dichotomy(m, FibIndex::unchecked(n)) {
            fail(report, m, "largest-part dichotomy fails".into());
            continue;
        }
        // In this subinterval a largest part F_n cannot sit over F_{n-1}
        // or F_{n-2}, so everything is in the involution's domain.
        for p in &parts {
            if p.largest().map(FibIndex::get) == Some(n) {
                if let Some(s) = p.second_largest().map(FibIndex::get) {
                    if s == n - 1 || s == n - 2 {
                        fail(report, m, format!("second largest {s} under largest {n}: {p:?}"));
                    }
                }
            }
        }
        let universe: HashSet<FibPartition> = parts.iter().cloned().collect();
        check_pairing(n, m, &parts, &universe, report);
        let t = oracle::tally(m);
        if t.r_even != t.r_odd {
            fail(report, m, format!("tallies differ: {} vs {}", t.r_even, t.r_odd));
        }
    }
}

fn verify_shift(n: u32, report: &mut ProofReport) {
    let lo = fib_u64(n) + fib_u64(n - 2);
    let hi = fib_u64(n + 1) - 1;
    for m in lo..=hi {
        report.degrees_checked += 1;
        let m_prime = m - fib_u64(n) - fib_u64(n - 2);
        let parts = oracle::enumerate_partitions(m);
        report.partitions_checked += parts.len() as u64;
        if !largest_part_dichotomy(m, FibIndex::unchecked(n)) {
            fail(report, m, "largest-part dichotomy fails".into());
            continue;
        }
        // Split into the paired family and the leftover {F_n, F_{n-2}, ...}
        // family; nothing else may occur.
        let mut pairable = Vec::new();
        let mut leftover = Vec::new();
        for p in &parts {
            let top = p.largest().map(FibIndex::get);
            let second = p.second_largest().map(FibIndex::get);
            if (top == Some(n) && second.is_none_or(|s| s <= n - 3))
                || (top == Some(n - 1) && second == Some(n - 2))
            {
                pairable.push(p.clone());
            } else if top == Some(n) && second == Some(n - 2) {
                leftover.push(p.clone());
            } else {
                fail(report, m, format!("partition fits no family: {p:?}"));
            }
        }
        let universe: HashSet<FibPartition> = parts.iter().cloned().collect();
        check_pairing(n, m, &pairable, &universe, report);

        // The strip map must biject the leftover family onto all
        // partitions of m', preserving the even/odd classification.
        let target = oracle::enumerate_partitions(m_prime);
        for q in &target {
            if q.largest().map(FibIndex::get).is_some_and(|t| t > n - 3) {
                fail(report, m, format!("partition of {m_prime} has a part above F_{}", n - 3));
            }
        }
        let target_set: HashSet<FibPartition> = target.iter().cloned().collect();
        let mut images = HashSet::new();
        for p in &leftover {
            match strip_map(p, FibIndex::unchecked(n)) {
                Ok(image) => {
                    if image.is_even() != p.is_even() {
                        fail(report, m, format!("strip changed parity class of {p:?}"));
                    }
                    if !target_set.contains(&image) {
                        fail(report, m, format!("strip image {image:?} not a partition of {m_prime}"));
                    }
                    if !images.insert(image) {
                        fail(report, m, format!("strip not injective at {p:?}"));
                    }
                }
                Err(e) => fail(report, m, format!("strip rejected {p:?}: {e}")),
            }
        }
        if images.len() != target.len() {
            fail(
                report,
                m,
                format!("strip covers {} of {} partitions of {m_prime}", images.len(), target.len()),
            );
        }
        // Coefficient identity a(m) = a(m') via the tallies.
        let (t, t_prime) = (oracle::tally(m), oracle::tally(m_prime));
        let diff = t.r_even as i64 - t.r_odd as i64;
        let diff_prime = t_prime.r_even as i64 - t_prime.r_odd as i64;
        if diff != diff_prime {
            fail(report, m, format!("a({m}) = {diff} but a({m_prime}) = {diff_prime}"));
        }
    }
}

fn verify_reflection(n: u32, report: &mut ProofReport) {
    if fib_u64(n - 3) < 2 {
        return; // sub1 is empty at n = 5; nothing to check.
    }
    let lo = fib_u64(n);
    let hi = fib_u64(n) + fib_u64(n - 3) - 2;
    let full = fib_u64(n + 2) - 2;
    for m in lo..=hi {
        report.degrees_checked += 1;
        let m_prime = full - m;
        // m' must land in [F_n + F_{n-2}, F_{n+1} - 2].
        if m_prime < fib_u64(n) + fib_u64(n - 2) || m_prime > fib_u64(n + 1) - 2 {
            fail(report, m, format!("complement degree {m_prime} outside the shift subinterval"));
        }
        let parts = oracle::enumerate_partitions(m);
        let target = oracle::enumerate_partitions(m_prime);
        report.partitions_checked += parts.len() as u64;
        let target_set: HashSet<FibPartition> = target.iter().cloned().collect();
        let mut images = HashSet::new();
        for p in &parts {
            if p.largest().map(FibIndex::get).is_some_and(|t| t > n) {
                fail(report, m, format!("partition of {m} has a part above F_{n}: {p:?}"));
                continue;
            }
            let image = match complement_map(p, FibIndex::unchecked(n)) {
                Ok(q) => q,
                Err(e) => {
                    fail(report, m, format!("complement rejected {p:?}: {e}"));
                    continue;
                }
            };
            if image.value_u64() != m_prime {
                fail(report, m, format!("complement of {p:?} has value {}", image.value_u64()));
            }
            if p.part_count() + image.part_count() != (n - 1) as usize {
                fail(report, m, format!("part counts {} + {} != n - 1", p.part_count(), image.part_count()));
            }
            if !target_set.contains(&image) {
                fail(report, m, format!("complement image {image:?} not a partition of {m_prime}"));
            }
            if complement_map(&image, FibIndex::unchecked(n)).ok() != Some(p.clone()) {
                fail(report, m, format!("complement not an involution on {p:?}"));
            }
            if !images.insert(image) {
                fail(report, m, format!("complement not injective at {p:?}"));
            }
        }
        if images.len() != target.len() {
            fail(
                report,
                m,
                format!("complement covers {} of {} partitions of {m_prime}", images.len(), target.len()),
            );
        }
        // Sign relation a(m) = (-1)^(n-1) a(F_n + F_{n-3} - 2 - m),
        // confirmed numerically with the brute-force tallies.
        let reflected = fib_u64(n) + fib_u64(n - 3) - 2 - m;
        let sign = if n.is_multiple_of(2) { -1 } else { 1 };
        let a_m = oracle::a_bruteforce(m).expect("desk-scale tally");
        let a_r = oracle::a_bruteforce(reflected).expect("desk-scale tally");
        if a_m.value() as i64 != sign * a_r.value() as i64 {
            fail(
                report,
                m,
                format!("sign relation fails: a({m}) = {a_m}, a({reflected}) = {a_r}, sign {sign}"),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(n: u32) -> FibIndex {
        FibIndex::new(n).unwrap()
    }

    fn part(raw: &[u32]) -> FibPartition {
        FibPartition::from_raw(raw).unwrap()
    }

    #[test]
    fn dichotomy_fixtures() {
        assert!(largest_part_dichotomy(6, ix(5)));
        assert!(largest_part_dichotomy(11, ix(6)));
        assert!(largest_part_dichotomy(20, ix(7)));
    }

    #[test]
    fn pairing_fixtures() {
        // {F_6} = 8 <-> {F_5, F_4} = 5 + 3.
        assert_eq!(pairing_involution(&part(&[6]), ix(6)).unwrap(), part(&[5, 4]));
        assert_eq!(pairing_involution(&part(&[5, 4, 2]), ix(6)).unwrap(), part(&[6, 2]));
        assert!(part(&[6, 2]).is_even());
        assert!(!part(&[5, 4, 2]).is_even());
    }

    #[test]
    fn pairing_rejects_outside_domain() {
        // Largest 6 with second 4 = n-2 is the leftover family, not pairable.
        assert!(pairing_involution(&part(&[6, 4]), ix(6)).is_err());
        // Largest 5 with second 3 has no F_{n-2} companion.
        assert!(pairing_involution(&part(&[5, 3]), ix(6)).is_err());
    }

    #[test]
    fn strip_fixtures() {
        assert_eq!(strip_map(&part(&[7, 5]), ix(7)).unwrap(), FibPartition::empty());
        assert_eq!(strip_map(&part(&[7, 5, 2]), ix(7)).unwrap(), part(&[2]));
        assert_eq!(strip_map(&part(&[6, 4, 2]), ix(6)).unwrap(), part(&[2]));
    }

    #[test]
    fn strip_rejects_missing_parts() {
        assert!(strip_map(&part(&[7, 4]), ix(7)).is_err());
        assert!(strip_map(&part(&[7, 6, 5]), ix(7)).is_err());
    }

    #[test]
    fn complement_fixtures() {
        assert_eq!(complement_map(&part(&[6, 5, 4, 3, 2]), ix(6)).unwrap(), FibPartition::empty());
        let full = complement_map(&FibPartition::empty(), ix(6)).unwrap();
        assert_eq!(full, part(&[6, 5, 4, 3, 2]));
        assert_eq!(full.value_u64(), 19);
        let c = complement_map(&part(&[6]), ix(6)).unwrap();
        assert_eq!(c, part(&[5, 4, 3, 2]));
        assert_eq!(c.value_u64(), 11);
    }

    #[test]
    fn complement_rejects_out_of_range() {
        assert!(complement_map(&part(&[7]), ix(6)).is_err());
    }

    #[test]
    fn verify_all_parts_at_n7() {
        for (part, degrees) in [
            (PropositionPart::Vanishing, 3),
            (PropositionPart::Shift, 3),
            (PropositionPart::Reflection, 2),
        ] {
            let report = verify_proposition(part, ix(7)).unwrap();
            assert_eq!(report.degrees_checked, degrees, "part {part}");
            assert!(report.passed(), "part {part}: {report}");
        }
    }

    #[test]
    fn verify_rejects_small_n() {
        assert!(verify_proposition(PropositionPart::Vanishing, ix(4)).is_err());
    }

    #[test]
    fn reflection_is_vacuous_at_n5() {
        let report = verify_proposition(PropositionPart::Reflection, ix(5)).unwrap();
        assert_eq!(report.degrees_checked, 0);
        assert!(report.passed());
    }

    #[test]
    fn part_numbers_roundtrip() {
        for k in 1..=3u8 {
            assert_eq!(PropositionPart::from_number(k).unwrap().number(), k);
        }
        assert_eq!(PropositionPart::from_number(4), None);
    }
}
