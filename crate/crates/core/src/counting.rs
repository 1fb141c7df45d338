//! The counting function N(λ) = #{eigenvalues ≤ λ} of the disk.
//!
//! k_n = #{k : j_k(n) ≤ √λ} is non-increasing in n because zeros grow with
//! the order, so the walk starts from k₀ and only ever steps k down as n
//! grows. N(λ) = k₀ + 2·Σ_{n≥1} k_n.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::olver::eta;
use crate::zeros::zero_at_most;

#[derive(Debug, Clone, PartialEq)]
pub struct CountResult {
    pub lambda: f64,
    pub count: u64,
    /// (n, k_n) for n = 0..=n_max.
    pub profile: Vec<(u32, u32)>,
    pub n_max: u32,
    /// Some zero sits within about 1e-9·λ of λ, so the ≤ test was decided
    /// by rounding.
    pub on_boundary: bool,
    /// Largest single-step drop k_n − k_{n+1} seen in the walk.
    pub max_decrement: u32,
}

fn at_most(nu: f64, k: u32, s: f64, boundary: &mut bool) -> Result<bool> {
    let c = zero_at_most(nu, k, s)?;
    *boundary |= c.near;
    Ok(c.at_most)
}

/// max{k : j_k(ν) ≤ s}, by doubling then bisection from McMahon's guess.
fn zeros_below(nu: f64, s: f64, boundary: &mut bool) -> Result<u32> {
    if s <= nu || !at_most(nu, 1, s, boundary)? {
        return Ok(0);
    }
    let guess = ((s - 0.5 * nu * PI) / PI + 0.25).max(1.0) as u32;
    let (mut lo, mut hi);
    if at_most(nu, guess, s, boundary)? {
        lo = guess;
        let mut step = 1;
        loop {
            hi = lo + step;
            if !at_most(nu, hi, s, boundary)? {
                break;
            }
            lo = hi;
            step *= 2;
        }
    } else {
        hi = guess;
        let mut step = 1;
        loop {
            let probe = hi.saturating_sub(step).max(1);
            if at_most(nu, probe, s, boundary)? {
                lo = probe;
                break;
            }
            hi = probe;
            step *= 2;
        }
    }
    // Invariant: j_lo ≤ s < j_hi.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at_most(nu, mid, s, boundary)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

pub fn count(lambda: f64) -> Result<CountResult> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return domain(format!("count needs a finite lambda > 0, got {lambda}"));
    }
    let s = lambda.sqrt();
    let mut boundary = false;
    let k0 = zeros_below(0.0, s, &mut boundary)?;
    let mut profile = vec![(0, k0)];
    let mut total = k0 as u64;
    let mut k = k0;
    let mut max_decrement = 0;
    let mut n = 0u32;
    while k > 0 {
        n += 1;
        let before = k;
        while k > 0 && !at_most(n as f64, k, s, &mut boundary)? {
            k -= 1;
        }
        max_decrement = max_decrement.max(before - k);
        if k == 0 {
            break;
        }
        profile.push((n, k));
        total += 2 * k as u64;
    }
    let n_max = profile.last().map(|p| p.0).unwrap_or(0);
    Ok(CountResult { lambda, count: total, profile, n_max, on_boundary: boundary, max_decrement })
}

/// N(λ) − λ/4 + √λ/2.
pub fn weyl_remainder(lambda: f64) -> Result<f64> {
    let c = count(lambda)?;
    Ok(c.count as f64 - 0.25 * lambda + 0.5 * lambda.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerOrderCount {
    /// #{k : j_k(n) ≤ √λ}.
    pub exact: u32,
    /// ⌊η(√λ, n)/π + 1/4⌋; `None` when √λ ≤ n, where η is undefined.
    pub approx: Option<i64>,
}

pub fn per_order_count(n: u32, sqrt_lambda: f64) -> Result<PerOrderCount> {
    if !(sqrt_lambda > 0.0 && sqrt_lambda.is_finite()) {
        return domain(format!("per_order_count needs a finite positive bound, got {sqrt_lambda}"));
    }
    let nu = n as f64;
    let mut boundary = false;
    let exact = zeros_below(nu, sqrt_lambda, &mut boundary)?;
    let approx = if n == 0 {
        Some((sqrt_lambda / PI + 0.25).floor() as i64)
    } else if sqrt_lambda > nu {
        Some((eta(sqrt_lambda, nu)? / PI + 0.25).floor() as i64)
    } else {
        None
    };
    Ok(PerOrderCount { exact, approx })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count(5.0).unwrap().count, 0);
        assert_eq!(count(5.8).unwrap().count, 1);
        assert_eq!(count(15.0).unwrap().count, 3);
        assert_eq!(count(100.0).unwrap().count, 21);
    }

    #[test]
    fn zeros_below_matches_direct_search() {
        let mut b = false;
        assert_eq!(zeros_below(0.0, 100.0, &mut b).unwrap(), 32);
        assert_eq!(zeros_below(40.0, 40.5, &mut b).unwrap(), 0);
        assert_eq!(per_order_count(5, 3.0).unwrap().approx, None);
    }

    #[test]
    fn rejects_bad_lambda() {
        assert!(count(0.0).is_err());
        assert!(count(f64::NAN).is_err());
    }
}
