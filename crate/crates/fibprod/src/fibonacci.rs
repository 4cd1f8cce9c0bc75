//! Fibonacci values under the convention F_2 = 1, F_3 = 2, and interval
//! location for arbitrary-size arguments.
//!
//! The product's exponents start at F_2, so index 1 never appears and the
//! value 1 occurs exactly once. All values are cached monotonically in a
//! shared table; concurrent readers are safe once a grow completes.

use std::fmt;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::Error;

/// Index into the Fibonacci sequence, constrained to n >= 2.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FibIndex(u32);

impl FibIndex {
    /// Smallest valid index: F_2 = 1.
    pub const MIN: FibIndex = FibIndex(2);

    pub fn new(n: u32) -> Result<Self, Error> {
        if n < 2 {
            Err(Error::IndexTooSmall { n })
        } else {
            Ok(Self(n))
        }
    }

    /// For indices known to be >= 2 by construction.
    pub(crate) fn unchecked(n: u32) -> Self {
        debug_assert!(n >= 2);
        Self(n)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `self + d`, which is always still a valid index.
    pub fn up(self, d: u32) -> Self {
        Self(self.0 + d)
    }

    /// `self - d`, if that stays at or above 2.
    pub fn down(self, d: u32) -> Result<Self, Error> {
        Self::new(self.0.saturating_sub(d))
    }
}

impl fmt::Display for FibIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u32> for FibIndex {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self, Error> {
        Self::new(n)
    }
}

// cache[i] = F_{i+2}
static CACHE: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// Grow the cache so that F_2 ..= F_n are present.
fn ensure(n: u32) {
    let need = (n - 1) as usize;
    {
        let cache = CACHE.read().unwrap();
        if cache.len() >= need {
            return;
        }
    }
    let mut cache = CACHE.write().unwrap();
    if cache.is_empty() {
        cache.push(BigUint::from(1u32));
        cache.push(BigUint::from(2u32));
    }
    while cache.len() < need {
        let next = &cache[cache.len() - 1] + &cache[cache.len() - 2];
        cache.push(next);
    }
}

/// F_n with F_2 = 1, F_3 = 2, F_n = F_{n-1} + F_{n-2}.
pub fn fib(n: FibIndex) -> BigUint {
    ensure(n.get());
    CACHE.read().unwrap()[(n.get() - 2) as usize].clone()
}

/// F_n as a u64, if it fits (it does for n <= 92).
pub fn fib_u64(n: FibIndex) -> Option<u64> {
    u64::try_from(fib(n)).ok()
}

/// F_2 + F_3 + ... + F_n, which telescopes to F_{n+2} - 2.
pub fn sum_fib_prefix(n: FibIndex) -> BigUint {
    fib(n.up(2)) - 2u32
}

/// The unique n >= 2 with F_n <= m < F_{n+1}.
///
/// Rejects m = 0, which precedes every interval; callers special-case it.
/// Implemented as a binary search over the monotone cache so boundary
/// degrees land in the right interval exactly.
pub fn locate(m: &BigUint) -> Result<FibIndex, Error> {
    if m.is_zero() {
        return Err(Error::NoContainingInterval);
    }
    loop {
        let cache = CACHE.read().unwrap();
        if cache.last().is_some_and(|last| last > m) {
            let idx = cache.partition_point(|f| f <= m);
            return Ok(FibIndex::unchecked(idx as u32 + 1));
        }
        let grown = cache.len() as u32 + 32;
        drop(cache);
        ensure(grown + 2);
    }
}

/// `locate` for machine-size m.
pub fn locate_u64(m: u64) -> Result<FibIndex, Error> {
    locate(&BigUint::from(m))
}
