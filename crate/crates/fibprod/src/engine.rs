//! The fast coefficient algorithm.
//!
//! For n >= 5 the interval [F_n, F_{n+1}) splits into three subintervals:
//! a reflected, sign-twisted copy of the series prefix; a run of zeros; and
//! a plain shifted copy of the prefix. Point queries follow the recursion
//! downward in O(log m) steps ([`a_fast`]); dense ranges are assembled
//! upward by pure copying, one interval block at a time ([`block`],
//! [`stream`]).

use num_bigint::BigUint;

use crate::coeff::{Coefficient, CoefficientBlock};
use crate::fibonacci::{self, FibIndex};
use crate::Error;

/// a(0..4), the seed below F_5 = 5: 1 - x - x^2 + x^4.
pub const BASE_TABLE: [i8; 5] = [1, -1, -1, 0, 1];

/// Which subinterval of [F_n, F_{n+1}) a degree falls in.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Case {
    /// Reflect onto F_n + F_{n-3} - 2 - m with sign (-1)^(n-1).
    Reflect,
    /// The coefficient is 0.
    Zero,
    /// Shift down to m - F_n - F_{n-2}.
    Shift,
}

/// The three subintervals of [F_n, F_{n+1}), with inclusive endpoints.
///
/// `sub1` is empty exactly when n = 5 (there F_{n-3} - 2 < 0 and the
/// reflected range vanishes).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalDecomposition {
    n: FibIndex,
    sub1: Option<(BigUint, BigUint)>,
    sub2: (BigUint, BigUint),
    sub3: (BigUint, BigUint),
}

impl IntervalDecomposition {
    pub fn n(&self) -> FibIndex {
        self.n
    }

    /// [F_n, F_n + F_{n-3} - 2], or None when empty.
    pub fn sub1(&self) -> Option<&(BigUint, BigUint)> {
        self.sub1.as_ref()
    }

    /// [F_n + F_{n-3} - 1, F_n + F_{n-2} - 1].
    pub fn sub2(&self) -> &(BigUint, BigUint) {
        &self.sub2
    }

    /// [F_n + F_{n-2}, F_{n+1} - 1].
    pub fn sub3(&self) -> &(BigUint, BigUint) {
        &self.sub3
    }

    /// Classify a degree within [F_n, F_{n+1}); None if outside.
    pub fn classify(&self, m: &BigUint) -> Option<Case> {
        if let Some((lo, hi)) = &self.sub1 {
            if m >= lo && m <= hi {
                return Some(Case::Reflect);
            }
        }
        if m >= &self.sub2.0 && m <= &self.sub2.1 {
            return Some(Case::Zero);
        }
        if m >= &self.sub3.0 && m <= &self.sub3.1 {
            return Some(Case::Shift);
        }
        None
    }
}

/// Split [F_n, F_{n+1}) into its three subintervals. Requires n >= 5.
pub fn decompose(n: FibIndex) -> Result<IntervalDecomposition, Error> {
    if n.get() < 5 {
        return Err(Error::DecompositionIndex { n: n.get() });
    }
    let f_n = fibonacci::fib(n);
    let f_n1 = fibonacci::fib(n.up(1));
    let f_n2 = fibonacci::fib(n.down(2)?);
    let f_n3 = fibonacci::fib(n.down(3)?);
    let sub1 = if f_n3 >= BigUint::from(2u32) {
        Some((f_n.clone(), &f_n + &f_n3 - 2u32))
    } else {
        None
    };
    let sub2 = (&f_n + &f_n3 - 1u32, &f_n + &f_n2 - 1u32);
    let sub3 = (&f_n + &f_n2, f_n1 - 1u32);
    Ok(IntervalDecomposition { n, sub1, sub2, sub3 })
}

/// a(m) for arbitrary-size m, in O(log m) steps.
pub fn a_fast(m: &BigUint) -> Coefficient {
    a_fast_with_steps(m).0
}

/// a(m) plus the number of interval descents taken; each descent drops the
/// interval index by at least 3, so the count is about locate(m)/3.
///
/// Iterative with an accumulated sign rather than literally recursive, so
/// queries at m with hundreds of digits cost no stack depth.
pub fn a_fast_with_steps(m: &BigUint) -> (Coefficient, u32) {
    let mut sign: i8 = 1;
    let mut m = m.clone();
    let mut steps = 0u32;
    loop {
        if let Ok(small) = u64::try_from(&m) {
            if small < 5 {
                let v = sign * BASE_TABLE[small as usize];
                return (Coefficient::new(v as i64).unwrap(), steps);
            }
        }
        steps += 1;
        let n = fibonacci::locate(&m).expect("m >= 5");
        let f_n = fibonacci::fib(n);
        let f_n2 = fibonacci::fib(n.down(2).expect("n >= 5"));
        let f_n3 = fibonacci::fib(n.down(3).expect("n >= 5"));
        // Boundary between sub1 and sub2; when F_{n-3} = 1 (n = 5) this is
        // F_n itself and sub1 is empty, so the first branch never fires.
        let zero_lo = &f_n + &f_n3 - 1u32;
        let shift_lo = &f_n + &f_n2;
        if m < zero_lo {
            if n.get().is_multiple_of(2) {
                sign = -sign;
            }
            m = (zero_lo - 1u32) - m;
        } else if m < shift_lo {
            return (Coefficient::ZERO, steps);
        } else {
            m -= shift_lo;
        }
    }
}

/// a(m) for machine-size m.
pub fn a_fast_u64(m: u64) -> Coefficient {
    a_fast(&BigUint::from(m))
}

/// Coefficients for [F_n, F_{n+1}) assembled by pure copying from a prefix
/// block covering degrees 0..F_{n-3} at least. No recursion: sub1 is the
/// reversed prefix with the sign twist, sub2 is zeros, sub3 is the prefix.
pub fn block(n: FibIndex, prefix: &CoefficientBlock) -> Result<CoefficientBlock, Error> {
    if n.get() < 5 {
        return Err(Error::DecompositionIndex { n: n.get() });
    }
    let k = fibonacci::fib_u64(n.down(3)?).expect("desk-scale block");
    if prefix.lo() != 0 || prefix.len() < k {
        return Err(Error::PrefixTooShort { have: prefix.len(), need: k });
    }
    let f_n = fibonacci::fib_u64(n).expect("desk-scale block");
    let f_n2 = fibonacci::fib_u64(n.down(2)?).expect("desk-scale block");
    let flip = n.get().is_multiple_of(2);
    let mut out = CoefficientBlock::with_capacity(f_n, f_n2 + k);
    // sub1: a(F_n + j) = (-1)^(n-1) a(F_{n-3} - 2 - j), j = 0 .. F_{n-3}-2.
    for i in (0..k.saturating_sub(1)).rev() {
        let c = prefix.at(i).unwrap();
        out.push(if flip { -c } else { c });
    }
    // sub2: F_{n-2} - F_{n-3} + 1 zeros.
    for _ in 0..(f_n2 - k + 1) {
        out.push(Coefficient::ZERO);
    }
    // sub3: a(F_n + F_{n-2} + j) = a(j), j = 0 .. F_{n-3}-1.
    for i in 0..k {
        out.push(prefix.at(i).unwrap());
    }
    Ok(out)
}

/// Coefficients a(0..=n_max), streamed interval by interval.
///
/// Seeds the base table, then appends `block(n, prefix)` for n = 5, 6, ...
/// until the intervals pass n_max (the last block is truncated). Amortized
/// O(1) per coefficient: each block is copied, never recomputed.
pub fn stream(n_max: u64) -> CoefficientBlock {
    let mut out = CoefficientBlock::with_capacity(0, n_max + 1);
    for &v in BASE_TABLE.iter().take((n_max + 1).min(5) as usize) {
        out.push(Coefficient::new(v as i64).unwrap());
    }
    if n_max < 5 {
        return out;
    }
    let mut n = FibIndex::unchecked(5);
    while fibonacci::fib_u64(n).expect("desk-scale stream") <= n_max {
        let b = block(n, &out).expect("prefix covers all prior degrees");
        for i in 0..b.len() {
            if b.lo() + i > n_max {
                break;
            }
            out.push(b.at(i).unwrap());
        }
        n = n.up(1);
    }
    out
}

/// Strictly increasing degrees m <= n_max with a(m) != 0.
pub fn support(n_max: u64) -> Vec<u64> {
    let s = stream(n_max);
    (0..s.len()).filter(|&m| !s.at(m).unwrap().is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(n: u32) -> FibIndex {
        FibIndex::new(n).unwrap()
    }

    fn big(m: u64) -> BigUint {
        BigUint::from(m)
    }

    fn pair(lo: u64, hi: u64) -> (BigUint, BigUint) {
        (big(lo), big(hi))
    }

    #[test]
    fn decompose_rejects_small_n() {
        assert_eq!(decompose(ix(4)), Err(Error::DecompositionIndex { n: 4 }));
    }

    #[test]
    fn decompose_n5() {
        let d = decompose(ix(5)).unwrap();
        assert_eq!(d.sub1(), None);
        assert_eq!(*d.sub2(), pair(5, 6));
        assert_eq!(*d.sub3(), pair(7, 7));
    }

    #[test]
    fn decompose_n6() {
        let d = decompose(ix(6)).unwrap();
        assert_eq!(d.sub1(), Some(&pair(8, 8)));
        assert_eq!(*d.sub2(), pair(9, 10));
        assert_eq!(*d.sub3(), pair(11, 12));
    }

    #[test]
    fn decompose_n7() {
        let d = decompose(ix(7)).unwrap();
        assert_eq!(d.sub1(), Some(&pair(13, 14)));
        assert_eq!(*d.sub2(), pair(15, 17));
        assert_eq!(*d.sub3(), pair(18, 20));
    }

    #[test]
    fn decompose_covers_interval_disjointly() {
        for n in 5..=25u32 {
            let d = decompose(ix(n)).unwrap();
            let f_n = fibonacci::fib(ix(n));
            let f_n1 = fibonacci::fib(ix(n + 1));
            let mut expect = f_n.clone();
            if let Some((lo, hi)) = d.sub1() {
                assert_eq!(*lo, expect);
                expect = hi + 1u32;
            }
            assert_eq!(d.sub2().0, expect);
            assert_eq!(d.sub3().0, &d.sub2().1 + 1u32);
            assert_eq!(&d.sub3().1 + 1u32, f_n1);
            // |sub2| = F_{n-2} - F_{n-3} + 1, |sub3| = F_{n-3}.
            let f_n2 = fibonacci::fib(ix(n - 2));
            let f_n3 = fibonacci::fib(ix(n - 3));
            assert_eq!(&d.sub2().1 - &d.sub2().0 + 1u32, &f_n2 - &f_n3 + 1u32);
            assert_eq!(&d.sub3().1 - &d.sub3().0 + 1u32, f_n3);
        }
    }

    #[test]
    fn a_fast_display_values() {
        assert_eq!(a_fast_u64(0).value(), 1);
        assert_eq!(a_fast_u64(8).value(), -1);
        assert_eq!(a_fast_u64(14).value(), 1);
    }

    #[test]
    fn block_n5() {
        let prefix = CoefficientBlock::from_values(0, &BASE_TABLE).unwrap();
        let b = block(ix(5), &prefix).unwrap();
        assert_eq!(b.lo(), 5);
        assert_eq!(b.to_vec(), vec![0, 0, 1]);
    }

    #[test]
    fn block_n6() {
        let prefix = CoefficientBlock::from_values(0, &BASE_TABLE).unwrap();
        let b = block(ix(6), &prefix).unwrap();
        assert_eq!(b.lo(), 8);
        assert_eq!(b.to_vec(), vec![-1, 0, 0, 1, -1]);
    }

    #[test]
    fn block_n7() {
        let prefix = stream(12);
        let b = block(ix(7), &prefix).unwrap();
        assert_eq!(b.lo(), 13);
        assert_eq!(b.to_vec(), vec![-1, 1, 0, 0, 0, 1, -1, -1]);
    }

    #[test]
    fn block_rejects_short_prefix() {
        let prefix = CoefficientBlock::from_values(0, &[1, -1]).unwrap();
        assert_eq!(
            block(ix(7), &prefix),
            Err(Error::PrefixTooShort { have: 2, need: 3 })
        );
    }

    #[test]
    fn stream_short_prefixes() {
        assert_eq!(stream(4).to_vec(), vec![1, -1, -1, 0, 1]);
        assert_eq!(stream(0).to_vec(), vec![1]);
        assert_eq!(stream(2).to_vec(), vec![1, -1, -1]);
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(8), vec![0, 1, 2, 4, 7, 8]);
        assert_eq!(support(0), vec![0]);
        assert_eq!(
            support(20),
            vec![0, 1, 2, 4, 7, 8, 11, 12, 13, 14, 18, 19, 20]
        );
    }

    #[test]
    fn steps_bounded_by_index_over_three() {
        for m in [big(10_000), big(999_999), BigUint::from(u64::MAX)] {
            let n = fibonacci::locate(&m).unwrap().get();
            let (_, steps) = a_fast_with_steps(&m);
            assert!(steps <= n / 3 + 2, "m = {m}: {steps} steps at index {n}");
        }
    }

    #[test]
    fn nonvanishing_at_prefix_tail() {
        // a(F_{n-3} - 1) != 0 for n in [5, 40].
        for n in 5..=40u32 {
            let m = fibonacci::fib(ix(n - 3)) - 1u32;
            assert!(!a_fast(&m).is_zero(), "n = {n}");
        }
    }
}
