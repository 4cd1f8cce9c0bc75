//! Coefficients of the Fibonacci infinite product
//!
//! ```text
//! A(x) = (1 - x)(1 - x^2)(1 - x^3)(1 - x^5)(1 - x^8) ...
//!      = 1 - x - x^2 + x^4 + x^7 - x^8 + x^11 - x^12 - x^13 + x^14 + x^18 + ...
//! ```
//!
//! where the exponents run over the distinct Fibonacci numbers F_2 = 1,
//! F_3 = 2, F_4 = 3, F_5 = 5, ... Every coefficient a(m) of this formal
//! power series is -1, 0 or 1, and the nonzero coefficients thin out: the
//! proportion of zeros among a(0..m) tends to 1.
//!
//! The crate provides three independent ways to compute a(m) and the
//! machinery to compare them:
//!
//! - [`engine`]: a three-interval recursion giving O(log m) point queries
//!   ([`engine::a_fast`]) and amortized O(1) streaming of dense coefficient
//!   ranges ([`engine::stream`]). This is the fast path; it answers queries
//!   for m with hundreds of digits in under a millisecond.
//! - [`oracle`]: two brute-force ground truths — exhaustive enumeration of
//!   partitions into distinct Fibonacci numbers (a(m) = r_E(m) - r_O(m))
//!   and direct truncated expansion of the product. The oracle never calls
//!   the engine; tests compare their outputs.
//! - [`proofs`]: executable versions of the combinatorial maps (pairing
//!   involution, strip map, complement map) behind the recursion, with
//!   exhaustive small-n verification of their domains and bijectivity.
//!
//! [`density`] quantifies the zero density: the nonzero-count recurrence
//! alpha_{n+1} = alpha_n + 2 alpha_{n-3} - 1, its characteristic roots, and
//! the comparison of the growth rate r1 ~ 1.54 against the golden ratio.
//!
//! # Quick example
//!
//! ```
//! use fibprod::engine;
//! use num_bigint::BigUint;
//!
//! // a(18) = +1: the x^18 term of the expansion above.
//! assert_eq!(engine::a_fast(&BigUint::from(18u32)).value(), 1);
//!
//! // The first 19 coefficients, streamed in bulk.
//! let block = engine::stream(18);
//! assert_eq!(block.get(4).unwrap().value(), 1);
//! assert_eq!(block.get(5).unwrap().value(), 0);
//! ```

pub mod coeff;
pub mod density;
pub mod engine;
pub mod fibonacci;
pub mod oracle;
pub mod proofs;

pub use coeff::{Coefficient, CoefficientBlock};
pub use fibonacci::FibIndex;

use thiserror::Error;

/// Errors for contract violations and verification failures.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    /// Fibonacci indices start at 2; F_1 is excluded so the value 1 occurs once.
    #[error("Fibonacci index {n} is below the minimum index 2")]
    IndexTooSmall { n: u32 },

    /// `locate(0)` has no answer: every interval [F_n, F_{n+1}) starts at 1 or above.
    #[error("m = 0 lies in no interval [F_n, F_(n+1))")]
    NoContainingInterval,

    /// A coefficient outside {-1, 0, 1} was about to be constructed.
    #[error("coefficient value {value} is outside {{-1, 0, 1}}")]
    CoefficientOutOfRange { value: i64 },

    /// The partition tally produced |r_E - r_O| > 1, which would contradict
    /// the coefficient bound; this signals an implementation bug.
    #[error("coefficient bound violated at m = {m}: r_even = {r_even}, r_odd = {r_odd}")]
    TheoremViolation { m: u64, r_even: u64, r_odd: u64 },

    /// The interval decomposition is only defined for n >= 5.
    #[error("interval decomposition requires n >= 5, got {n}")]
    DecompositionIndex { n: u32 },

    /// A block builder was handed a prefix that does not cover enough degrees.
    #[error("prefix covers {have} coefficients but at least {need} are required")]
    PrefixTooShort { have: u64, need: u64 },

    /// A combinatorial map was applied outside its stated domain.
    #[error("partition outside the map's domain: {0}")]
    MapDomain(String),

    /// Partition indices must be strictly decreasing and all >= 2.
    #[error("partition indices must be strictly decreasing and >= 2")]
    MalformedPartition,

    /// Root refinement failed to reach the requested tolerance.
    #[error("root refinement did not converge within {iterations} iterations")]
    NoConvergence { iterations: u32 },

    /// A tolerance or other numeric parameter was not positive.
    #[error("parameter {name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },
}
