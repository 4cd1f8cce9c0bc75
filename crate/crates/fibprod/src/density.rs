//! Zero-density bookkeeping: the nonzero-count recurrence, exact densities,
//! and the characteristic-root comparison that shows the density of zeros
//! tends to 1.
//!
//! Let alpha_n be the number of nonzero coefficients among a(0..F_n - 1).
//! Within [F_n, F_{n+1}) the three subintervals contribute alpha_{n-3} - 1,
//! 0 and alpha_{n-3} nonzeros, so
//!
//! ```text
//! alpha_{n+1} = alpha_n + 2 alpha_{n-3} - 1
//! ```
//!
//! The characteristic polynomial x^4 - x^3 - 2 has dominant root r1 ~ 1.54,
//! while F_n grows like the golden ratio ~ 1.62, so alpha_n / F_n -> 0.
//! Densities here are exact rationals; floats only enter where the roots do.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::engine;
use crate::fibonacci::{self, FibIndex};
use crate::Error;

/// Nonzero-count bookkeeping for one index n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaRecord {
    pub n: FibIndex,
    /// Nonzero coefficients among a(0..F_n - 1).
    pub alpha: BigUint,
    pub fib_n: BigUint,
    /// alpha_n / F_n, exactly.
    pub ratio: BigRational,
}

fn record(n: u32, alpha: BigUint) -> AlphaRecord {
    let n = FibIndex::unchecked(n);
    let fib_n = fibonacci::fib(n);
    let ratio = BigRational::new(BigInt::from(alpha.clone()), BigInt::from(fib_n.clone()));
    AlphaRecord { n, alpha, fib_n, ratio }
}

/// alpha_n for n = 2 ..= n_max via the recurrence.
///
/// Seeds alpha_2..alpha_5 = 1, 2, 3, 4 (nonzero counts of the prefixes
/// [1], [1,-1], [1,-1,-1], [1,-1,-1,0,1]) and extends with
/// alpha_{n+1} = alpha_n + 2 alpha_{n-3} - 1 for n >= 5. The seeds are
/// regenerated from [`alpha_direct`] in tests rather than trusted.
pub fn alpha_recurrence(n_max: FibIndex) -> Vec<AlphaRecord> {
    let mut alphas: Vec<BigUint> = [1u32, 2, 3, 4].iter().map(|&a| BigUint::from(a)).collect();
    while alphas.len() < (n_max.get() - 1) as usize {
        // alphas[i] = alpha_{i+2}; next index is alphas.len() + 2 = n + 1.
        let a_n = &alphas[alphas.len() - 1];
        let a_n3 = &alphas[alphas.len() - 4];
        alphas.push(a_n + a_n3 * 2u32 - 1u32);
    }
    alphas
        .into_iter()
        .take((n_max.get() - 1) as usize)
        .enumerate()
        .map(|(i, a)| record(i as u32 + 2, a))
        .collect()
}

/// alpha_n by direct count over the streamed coefficients; desk-scale
/// (F_n up to ~10^7).
pub fn alpha_direct(n: FibIndex) -> u64 {
    let f_n = fibonacci::fib_u64(n).expect("desk-scale alpha count");
    let s = engine::stream(f_n - 1);
    s.iter().filter(|c| !c.is_zero()).count() as u64
}

/// Exact fraction of zeros among a(0..=m).
pub fn zero_density(m: u64) -> BigRational {
    let s = engine::stream(m);
    let zeros = s.iter().filter(|c| c.is_zero()).count() as u64;
    BigRational::new(BigInt::from(zeros), BigInt::from(m + 1))
}

/// Check the proof's exact bound chain at m: with n the index satisfying
/// F_{n-1} <= m < F_n,
///
/// ```text
/// p_m >= 1 - alpha_n / (m + 1) > 1 - 2 alpha_n / F_n
/// ```
///
/// where p_m is the exact zero density over [0, m]. Requires m >= 1.
pub fn density_bound_check(m: u64) -> bool {
    assert!(m >= 1, "no index n has F_(n-1) <= 0 < F_n");
    let n = fibonacci::locate_u64(m).expect("m >= 1").up(1);
    let records = alpha_recurrence(n);
    let alpha = &records.last().unwrap().alpha;
    let f_n = fibonacci::fib(n);
    let s = engine::stream(m);
    let zeros = s.iter().filter(|c| c.is_zero()).count() as u64;
    // p_m >= 1 - alpha/(m+1)  <=>  zeros + alpha >= m + 1
    let first = BigUint::from(zeros) + alpha >= BigUint::from(m + 1);
    // 1 - alpha/(m+1) > 1 - 2 alpha/F_n  <=>  F_n < 2(m+1)  (alpha > 0)
    let second = !alpha.is_zero() && f_n < BigUint::from(2 * (m + 1));
    first && second
}

/// The roots of x^4 - x^3 - 2 together with the golden ratio.
#[derive(Clone, PartialEq, Debug)]
pub struct RootSet {
    /// Dominant real root, ~1.5437.
    pub r1: f64,
    /// Exactly -1.
    pub r2: f64,
    /// ~0.2281 + 1.1151i.
    pub r3: Complex64,
    /// Conjugate of r3.
    pub r4: Complex64,
    /// (1 + sqrt 5) / 2.
    pub lambda: f64,
}

impl RootSet {
    /// |x^4 - x^3 - 2| at a candidate root.
    pub fn residual(x: Complex64) -> f64 {
        (x.powu(4) - x.powu(3) - 2.0).norm()
    }

    /// Residuals of r1..r4 in order.
    pub fn residuals(&self) -> [f64; 4] {
        [
            Self::residual(Complex64::new(self.r1, 0.0)),
            Self::residual(Complex64::new(self.r2, 0.0)),
            Self::residual(self.r3),
            Self::residual(self.r4),
        ]
    }
}

/// Solve x^4 - x^3 - 2 = 0.
///
/// x = -1 is a root exactly; deflating by (x + 1) leaves
/// x^3 - 2x^2 + 2x - 2, whose unique real root r1 is bracketed in (1, 2)
/// by bisection and polished by Newton. The complex pair comes from the
/// residual quadratic x^2 - (2 - r1) x + 2/r1.
pub fn roots(tolerance: f64) -> Result<RootSet, Error> {
    if tolerance <= 0.0 {
        return Err(Error::NonPositiveParameter { name: "tolerance", value: tolerance });
    }
    let g = |x: f64| x * x * x - 2.0 * x * x + 2.0 * x - 2.0;
    let dg = |x: f64| 3.0 * x * x - 4.0 * x + 2.0;

    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..20 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut r1 = 0.5 * (lo + hi);
    let mut converged = false;
    for _ in 0..100 {
        let step = g(r1) / dg(r1);
        r1 -= step;
        if step.abs() < tolerance {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { iterations: 100 });
    }

    let re = 0.5 * (2.0 - r1);
    let disc = (2.0 - r1) * (2.0 - r1) - 8.0 / r1;
    debug_assert!(disc < 0.0);
    let im = 0.5 * (-disc).sqrt();
    Ok(RootSet {
        r1,
        r2: -1.0,
        r3: Complex64::new(re, im),
        r4: Complex64::new(re, -im),
        lambda: (1.0 + 5.0f64.sqrt()) / 2.0,
    })
}

/// One row of the asymptotic trend table.
#[derive(Clone, PartialEq, Debug)]
pub struct AsymptoticRow {
    pub n: u32,
    /// alpha_n / F_n as a float.
    pub alpha_over_fib: f64,
    /// alpha_n / r1^n; approaches a positive constant.
    pub alpha_over_r1_pow: f64,
    /// (alpha_n / F_n) / (alpha_{n-1} / F_{n-1}); approaches r1 / lambda.
    pub consecutive_ratio: Option<f64>,
}

/// Trend data for n = 2 ..= n_max, driven entirely by the recurrence (no
/// coefficient streaming), so n_max up to ~80 stays exact in the integer
/// columns. The float columns carry f64 precision (53-bit mantissa).
pub fn asymptotic_report(n_max: FibIndex) -> Vec<AsymptoticRow> {
    let rs = roots(1e-12).expect("fixed quartic converges");
    let records = alpha_recurrence(n_max);
    let mut rows = Vec::with_capacity(records.len());
    let mut prev: Option<BigRational> = None;
    for rec in &records {
        let n = rec.n.get();
        let ratio_f = rec.ratio.to_f64().unwrap_or(f64::NAN);
        let alpha_f = rec.alpha.to_f64().unwrap_or(f64::NAN);
        let consecutive = prev.as_ref().map(|p| {
            (&rec.ratio / p).to_f64().unwrap_or(f64::NAN)
        });
        rows.push(AsymptoticRow {
            n,
            alpha_over_fib: ratio_f,
            alpha_over_r1_pow: alpha_f / rs.r1.powi(n as i32),
            consecutive_ratio: consecutive,
        });
        prev = Some(rec.ratio.clone());
    }
    rows
}
