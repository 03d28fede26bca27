//! Classical coding bounds: Plotkin, Hamming (sphere packing), Grey-Rankin,
//! and the minimum-distance optimality predicate for self-complementary
//! `[2^m, 1+3m/2]` codes.
//!
//! All arithmetic is exact. Plotkin and Grey-Rankin fit comfortably in
//! `u128`; the Hamming bound compares against `2^n` for `n` up to `2^16`, so
//! it runs on big integers.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Outcome of the Plotkin bound: the bound only constrains codes with
/// `2d > n`. "Not applicable" is a distinct state so that callers cannot
/// mistake it for a cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotkinBound {
    Max(u128),
    NotApplicable,
}

/// Plotkin bound: for `2d > n` a binary code with minimum distance `d` has at
/// most `2 * floor(d / (2d - n))` codewords.
pub fn plotkin_max(n: u64, d: u64) -> PlotkinBound {
    assert!(d >= 1, "minimum distance must be positive");
    if 2 * d > n {
        PlotkinBound::Max(2 * (d as u128 / (2 * d - n) as u128))
    } else {
        PlotkinBound::NotApplicable
    }
}

/// Sphere-packing feasibility of an `[n, k, d]` binary code:
/// `2^k * sum_{i<=e} C(n, i) <= 2^n` with `e = floor((d-1)/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HammingReport {
    pub feasible: bool,
    /// Equality: the parameters of a perfect code.
    pub tight: bool,
}

pub fn hamming_feasible(n: u64, k: u64, d: u64) -> HammingReport {
    let e = (d.saturating_sub(1)) / 2;
    let mut sphere = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    for i in 0..=e {
        if i > 0 {
            binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
        }
        sphere += &binom;
    }
    let lhs = (BigUint::from(1u32) << k) * sphere;
    let rhs = BigUint::from(1u32) << n;
    HammingReport {
        feasible: lhs <= rhs,
        tight: lhs == rhs,
    }
}

/// Grey-Rankin bound for self-complementary binary codes:
/// `|C| <= 8d(n-d) / (n - (n-2d)^2)` on the region where the denominator is
/// positive.
pub fn grey_rankin_max(n: u64, d: u64) -> Result<u128> {
    let n = n as i128;
    let d = d as i128;
    let denom = n - (n - 2 * d) * (n - 2 * d);
    if denom <= 0 {
        return Err(Error::BoundOutOfRegion(format!(
            "Grey-Rankin needs n - (n-2d)^2 > 0, got {denom}"
        )));
    }
    Ok((8 * d * (n - d) / denom) as u128)
}

/// Optimality of a self-complementary `[2^m, 1+3m/2, 2^(m-1) - 2^(m/2-1)]`
/// code for even `m`: for every candidate improvement `delta` with
/// `0 < delta < 2^(m/2-1)`, the Grey-Rankin ceiling at the larger distance
/// falls below `2^(1+3m/2)`, so no self-complementary code of this length and
/// cardinality reaches a larger minimum distance.
pub fn self_complementary_optimality(m: u32) -> Result<bool> {
    if m % 2 != 0 || m == 0 {
        return Err(Error::OddVariableCount(m));
    }
    let n = 1u64 << m;
    let base_d = (1u64 << (m - 1)) - (1u64 << (m / 2 - 1));
    let cardinality = 1u128 << (1 + 3 * m / 2);
    for delta in 1..1u64 << (m / 2 - 1) {
        let d = base_d + delta;
        let ceiling = grey_rankin_max(n, d)?;
        // the bound chain's closed form: 2 + 2^(m-1)(2^m - 1) / (delta (2^(m/2) - delta))
        let num = (1u128 << (m - 1)) * ((1u128 << m) - 1);
        let den = delta as u128 * ((1u128 << (m / 2)) - delta as u128);
        debug_assert_eq!(ceiling, 2 + num / den);
        debug_assert!(den >= (1u128 << (m / 2)) - 1);
        if ceiling >= cardinality {
            return Ok(false);
        }
    }
    Ok(true)
}
