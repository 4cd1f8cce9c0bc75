//! Ground-truth computations of a(m), independent of the fast engine.
//!
//! Two routes:
//!
//! 1. Exhaustive enumeration of partitions of m into distinct Fibonacci
//!    numbers, tallied by parity of the part count: a(m) = r_E(m) - r_O(m).
//! 2. Truncated expansion of the product itself, multiplying one sparse
//!    binomial (1 - x^{F_k}) at a time.
//!
//! Both are exponential-flavored desk-scale tools (enumeration is practical
//! to roughly m <= 10^5, expansion to degree ~10^7). Nothing here calls
//! [`crate::engine`]; the dependency is one-directional so that tests
//! comparing the two sides actually mean something.

use num_bigint::BigUint;

use crate::coeff::{Coefficient, CoefficientBlock};
use crate::fibonacci::{self, FibIndex};
use crate::Error;

/// Practical upper bound for exhaustive enumeration; not enforced, but the
/// search is exponential-ish in the number of Fibonacci numbers below m.
pub const ENUMERATION_BOUND: u64 = 100_000;

/// A partition of some m into distinct positive Fibonacci numbers, stored
/// as strictly decreasing indices (each >= 2, so the part 1 occurs at most
/// once).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FibPartition {
    indices: Vec<FibIndex>,
}

impl FibPartition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { indices: Vec::new() }
    }

    pub fn new(indices: Vec<FibIndex>) -> Result<Self, Error> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::MalformedPartition);
        }
        Ok(Self { indices })
    }

    /// Convenience constructor from raw index values.
    pub fn from_raw(indices: &[u32]) -> Result<Self, Error> {
        let ixs = indices
            .iter()
            .map(|&n| FibIndex::new(n))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ixs)
    }

    pub fn indices(&self) -> &[FibIndex] {
        &self.indices
    }

    /// Sum of the Fibonacci values of the parts.
    pub fn value(&self) -> BigUint {
        self.indices.iter().map(|&n| fibonacci::fib(n)).sum()
    }

    pub fn value_u64(&self) -> u64 {
        u64::try_from(self.value()).expect("desk-scale partition value")
    }

    pub fn part_count(&self) -> usize {
        self.indices.len()
    }

    /// True when the part count is even ("even partition").
    pub fn is_even(&self) -> bool {
        self.indices.len().is_multiple_of(2)
    }

    pub fn contains(&self, n: FibIndex) -> bool {
        self.indices.binary_search_by(|x| n.cmp(x)).is_ok()
    }

    pub fn largest(&self) -> Option<FibIndex> {
        self.indices.first().copied()
    }

    pub fn second_largest(&self) -> Option<FibIndex> {
        self.indices.get(1).copied()
    }
}

/// All partitions of m into distinct Fibonacci numbers (indices >= 2).
///
/// Depth-first over indices in decreasing order, so the output order is
/// canonical: partitions with larger leading parts come first. A branch is
/// pruned when the remaining indices cannot reach the residual
/// (F_2 + ... + F_k < residual). m = 0 yields exactly the empty partition.
pub fn enumerate_partitions(m: u64) -> Vec<FibPartition> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(FibPartition::empty());
        return out;
    }
    let start = fibonacci::locate_u64(m).expect("m >= 1");
    let mut current = Vec::new();
    dfs(start.get(), m, &mut current, &mut out);
    out
}

fn dfs(k: u32, residual: u64, current: &mut Vec<FibIndex>, out: &mut Vec<FibPartition>) {
    if residual == 0 {
        out.push(FibPartition { indices: current.clone() });
        return;
    }
    if k < 2 {
        return;
    }
    // Remaining available sum is F_2 + ... + F_k = F_{k+2} - 2.
    let available = u64::try_from(fibonacci::sum_fib_prefix(FibIndex::unchecked(k)))
        .expect("desk-scale prefix sum");
    if available < residual {
        return;
    }
    let f_k = fibonacci::fib_u64(FibIndex::unchecked(k)).expect("desk-scale value");
    if f_k <= residual {
        current.push(FibIndex::unchecked(k));
        dfs(k - 1, residual - f_k, current, out);
        current.pop();
    }
    dfs(k - 1, residual, current, out);
}

/// Partition counts split by parity of the part count.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct PartitionTally {
    pub r_even: u64,
    pub r_odd: u64,
}

pub fn tally(m: u64) -> PartitionTally {
    let mut t = PartitionTally { r_even: 0, r_odd: 0 };
    for p in enumerate_partitions(m) {
        if p.is_even() {
            t.r_even += 1;
        } else {
            t.r_odd += 1;
        }
    }
    t
}

/// a(m) = r_E(m) - r_O(m) by exhaustive enumeration.
///
/// Returns [`Error::TheoremViolation`] if the difference falls outside
/// {-1, 0, 1}; that cannot happen for a correct enumeration and would
/// indicate a bug rather than a property of the series.
pub fn a_bruteforce(m: u64) -> Result<Coefficient, Error> {
    let t = tally(m);
    let diff = t.r_even as i64 - t.r_odd as i64;
    Coefficient::new(diff).map_err(|_| Error::TheoremViolation {
        m,
        r_even: t.r_even,
        r_odd: t.r_odd,
    })
}

/// Coefficients a(0..=n_max) by truncated expansion of the product.
///
/// Multiplies in the factors (1 - x^{F_k}) for every F_k <= n_max, each as
/// an in-place sparse update; factors with F_k > n_max cannot touch degrees
/// <= n_max, so the truncation is exact. The final pass checks every value
/// lies in {-1, 0, 1} instead of assuming it.
pub fn product_series(n_max: u64) -> CoefficientBlock {
    let len = (n_max + 1) as usize;
    let mut acc: Vec<i64> = vec![0; len];
    acc[0] = 1;
    let mut k = FibIndex::MIN;
    loop {
        let f = fibonacci::fib_u64(k).expect("desk-scale degree") as usize;
        if f > n_max as usize {
            break;
        }
        // (1 - x^f): new[i] = old[i] - old[i - f], descending keeps old values live.
        for i in (f..len).rev() {
            acc[i] -= acc[i - f];
        }
        k = k.up(1);
    }
    let mut block = CoefficientBlock::with_capacity(0, len as u64);
    for (i, &v) in acc.iter().enumerate() {
        let c = Coefficient::new(v)
            .unwrap_or_else(|_| panic!("expansion produced a({i}) = {v}, outside {{-1,0,1}}"));
        block.push(c);
    }
    block
}
