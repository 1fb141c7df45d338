//! Positive zeros j_k(ν) of J_ν.
//!
//! Every zero is found inside a bracket known to hold exactly the k-th zero
//! and then polished by Newton's method guarded by bisection. Brackets come,
//! in order of preference, from Schafheitlin's intervals, the Qu–Wong bounds,
//! a window around the uniform (Airy-type) estimate, a window around
//! McMahon's estimate, and finally a march from the previous zero.
//!
//! A candidate interval is only accepted after the signs of J_ν at both
//! ends agree with the parity of k: J_ν > 0 on (0, j_1), so J_ν has sign
//! (−1)^{k−1} just below j_k and (−1)^k just above it.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{domain, Error, Result};
use crate::olver::{coefficient_at, zeta_inverse_neg, Coefficient};
use crate::specfun::{airy_zero, airy_zero_asymptotic, bessel_j, j_and_jp_default};

pub const DEFAULT_ABS_TOL: f64 = 1e-10;
const CBRT2: f64 = 1.259_921_049_894_873_2;

/// Which zero of which J_ν, and how accurately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroQuery {
    pub nu: f64,
    pub k: u32,
    pub abs_tol: f64,
}

impl ZeroQuery {
    pub fn new(nu: f64, k: u32) -> Result<Self> {
        Self::with_tol(nu, k, DEFAULT_ABS_TOL)
    }

    pub fn with_tol(nu: f64, k: u32, abs_tol: f64) -> Result<Self> {
        let q = ZeroQuery { nu, k, abs_tol };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.nu >= 0.0 && self.nu.is_finite()) {
            return domain(format!("zero query: order must be finite and >= 0, got {}", self.nu));
        }
        if self.k < 1 {
            return domain("zero query: k must be at least 1");
        }
        if !(self.abs_tol > 0.0 && self.abs_tol <= 1e-6) {
            return domain(format!("zero query: abs_tol must lie in (0, 1e-6], got {}", self.abs_tol));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketSource {
    QuWong,
    Schafheitlin,
    McMahonSeed,
    OlverUniform,
    ExpansionStep,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroBracket {
    pub lo: f64,
    pub hi: f64,
    pub source: BracketSource,
}

const AIRY_CACHE: usize = 64;

/// a_k, memoized for small k where Newton refinement is needed.
fn cached_airy_zero(k: u32) -> f64 {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| (1..=AIRY_CACHE as u32).map(|k| airy_zero(k).expect("k >= 1")).collect());
    if (k as usize) <= AIRY_CACHE {
        cache[k as usize - 1]
    } else {
        airy_zero_asymptotic(k)
    }
}

fn check_order(nu: f64, k: u32, strictly_positive: bool) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 || (strictly_positive && nu == 0.0) {
        return domain(format!("invalid order {nu}"));
    }
    if k < 1 {
        return domain("k must be at least 1");
    }
    Ok(())
}

/// Six-term large-order expansion of j_k(ν) in powers of ν^{−2/3}.
pub fn olver_zero_estimate(nu: f64, k: u32) -> Result<f64> {
    check_order(nu, k, true)?;
    let g = -cached_airy_zero(k) / CBRT2;
    let c = nu.cbrt();
    let ci = 1.0 / c;
    let (g2, g3) = (g * g, g * g * g);
    Ok(nu
        + g * c
        + 0.3 * g2 * ci
        + (5.0 - g3) / 350.0 / nu
        - (479.0 * g3 * g + 20.0 * g) / 63_000.0 * ci * ci / nu
        + (20_231.0 * g3 * g2 - 27_550.0 * g2) / 8_085_000.0 * ci / (nu * nu))
}

/// Uniform estimate ν·z(ζ) + f₁(ζ)/ν with ζ = ν^{−2/3} a_k.
pub fn uniform_zero_estimate(nu: f64, k: u32) -> Result<f64> {
    check_order(nu, k, true)?;
    let zeta = cached_airy_zero(k) / (nu * nu).cbrt();
    let z = zeta_inverse_neg(zeta)?;
    let h2 = 2.0 * (-zeta / ((z - 1.0) * (z + 1.0))).sqrt();
    let f1 = 0.5 * z * h2 * coefficient_at(Coefficient::B0, z, zeta);
    Ok(nu * z + f1 / nu)
}

/// McMahon's large-k expansion.
pub fn mcmahon_estimate(nu: f64, k: u32) -> f64 {
    let mu = 4.0 * nu * nu;
    let b = (k as f64 + 0.5 * nu - 0.25) * PI;
    let e = 1.0 / (8.0 * b);
    let e2 = e * e;
    b - (mu - 1.0) * e * (1.0 + e2 * 4.0 * (7.0 * mu - 31.0) / 3.0
        + e2 * e2 * 32.0 * (83.0 * mu * mu - 982.0 * mu + 3779.0) / 15.0)
}

/// Both sides of the Qu–Wong inequality, unvalidated.
pub fn qu_wong_bracket(nu: f64, k: u32) -> Result<ZeroBracket> {
    if nu == 0.0 {
        return domain("the Qu-Wong bounds need a positive order; use the Schafheitlin interval at order 0");
    }
    check_order(nu, k, true)?;
    let a = cached_airy_zero(k);
    let c = nu.cbrt();
    let lo = nu - a / CBRT2 * c;
    let hi = lo + 0.15 * a * a * CBRT2 / c;
    Ok(ZeroBracket { lo, hi, source: BracketSource::QuWong })
}

/// The k-th Schafheitlin interval for ν < 5/2, or the large-zero interval
/// when it applies; `None` outside both ranges.
fn schafheitlin(nu: f64, k: u32) -> Option<(f64, f64)> {
    let kf = k as f64;
    let (lo, hi) = if nu <= 0.5 {
        ((kf + 0.5 * nu - 0.25) * PI, (kf + 0.25 * nu - 0.125) * PI)
    } else if nu < 2.5 {
        ((kf + 0.25 * nu - 0.125) * PI, (kf + 0.5 * nu - 0.25) * PI)
    } else {
        let lo = (kf + 0.5 * nu - 0.5) * PI;
        if lo <= (2.0 * nu + 1.0) * (2.0 * nu + 3.0) / PI {
            return None;
        }
        return Some((lo, (kf + 0.5 * nu - 0.25) * PI));
    };
    // Near ν = 1/2 the interval shrinks to the single point kπ; widen it
    // symmetrically so that rounding at the ends cannot hide the zero.
    let min_width = 0.2;
    if hi - lo < min_width {
        let mid = 0.5 * (lo + hi);
        return Some((mid - 0.5 * min_width, mid + 0.5 * min_width));
    }
    Some((lo, hi))
}

/// (−1)^{k−1}: the sign of J_ν just below j_k.
fn sign_below(k: u32) -> f64 {
    if k % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

/// True when the signs of J_ν at lo and hi are the ones expected around j_k.
fn parity_ok(nu: f64, k: u32, lo: f64, hi: f64) -> Result<bool> {
    if !(lo < hi) || lo <= 0.0 {
        return Ok(false);
    }
    let s = sign_below(k);
    let jl = bessel_j(nu, lo)?;
    if jl * s <= 0.0 {
        return Ok(false);
    }
    let jh = bessel_j(nu, hi)?;
    Ok(jh * s < 0.0)
}

/// A validated bracket holding j_k(ν) and no other zero.
pub fn zero_bracket(nu: f64, k: u32) -> Result<ZeroBracket> {
    check_order(nu, k, false)?;
    let floor = nu.max(f64::MIN_POSITIVE);
    let accept = |lo: f64, hi: f64, source| -> Result<Option<ZeroBracket>> {
        let lo = lo.max(floor);
        Ok(if parity_ok(nu, k, lo, hi)? { Some(ZeroBracket { lo, hi, source }) } else { None })
    };
    if let Some((lo, hi)) = schafheitlin(nu, k) {
        if let Some(b) = accept(lo, hi, BracketSource::Schafheitlin)? {
            return Ok(b);
        }
    }
    if nu > 0.0 {
        let b = qu_wong_bracket(nu, k)?;
        let below_ok = k == 1 || qu_wong_bracket(nu, k - 1)?.hi < b.lo;
        let above_ok = b.hi < qu_wong_bracket(nu, k + 1)?.lo;
        if below_ok && above_ok {
            if let Some(b) = accept(b.lo, b.hi, BracketSource::QuWong)? {
                return Ok(b);
            }
        }
    }
    // Zeros of J_ν are more than π apart when ν > 1/2, so a window narrower
    // than π with the right end signs holds exactly the k-th one.
    if nu > 0.5 {
        let est = uniform_zero_estimate(nu, k)?;
        let w = 0.49 * PI;
        if let Some(b) = accept(est - w, est + w, BracketSource::OlverUniform)? {
            return Ok(b);
        }
    } else {
        let est = mcmahon_estimate(nu, k);
        if let Some(b) = accept(est - 1.2, est + 1.2, BracketSource::McMahonSeed)? {
            return Ok(b);
        }
    }
    expansion_step(nu, k)
}

/// March from the previous zero in steps shorter than any zero spacing.
fn expansion_step(nu: f64, k: u32) -> Result<ZeroBracket> {
    const STEP: f64 = 0.5;
    let start = if k == 1 { nu.max(STEP) } else { bessel_zero_nk(nu, k - 1)? + 1e-9 };
    let s = sign_below(k);
    let mut lo = start;
    let mut f_lo = bessel_j(nu, lo)?;
    if f_lo * s <= 0.0 {
        return Err(Error::NotBracketed { what: "expansion step start", lo, hi: lo });
    }
    for _ in 0..1_000_000 {
        let hi = lo + STEP;
        let f_hi = bessel_j(nu, hi)?;
        if f_hi * s < 0.0 {
            return Ok(ZeroBracket { lo, hi, source: BracketSource::ExpansionStep });
        }
        lo = hi;
        f_lo = f_hi;
    }
    let _ = f_lo;
    Err(Error::NotBracketed { what: "expansion step", lo: start, hi: lo })
}

/// Newton's method kept inside [lo, hi], bisecting whenever a step leaves it.
fn refine(nu: f64, k: u32, bracket: ZeroBracket, seed: f64, abs_tol: f64) -> Result<f64> {
    let s = sign_below(k);
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let mut x = if seed > a && seed < b { seed } else { 0.5 * (a + b) };
    let stop = 1e-3 * abs_tol;
    for _ in 0..200 {
        let (f, fp) = j_and_jp_default(nu, x)?;
        if f == 0.0 {
            return Ok(x);
        }
        if f * s > 0.0 {
            a = x;
        } else {
            b = x;
        }
        let newton = x - f / fp;
        let next = if newton > a && newton < b && fp != 0.0 { newton } else { 0.5 * (a + b) };
        let moved = (next - x).abs();
        x = next;
        if moved <= stop.max(4.0 * f64::EPSILON * x) || b - a <= stop {
            return Ok(x);
        }
    }
    Err(Error::NoConvergence { what: "Bessel zero refinement", lo: a, hi: b })
}

fn seed(nu: f64, k: u32) -> Result<f64> {
    if nu <= 0.5 {
        Ok(mcmahon_estimate(nu, k))
    } else {
        uniform_zero_estimate(nu, k)
    }
}

/// j_k(ν) to within `q.abs_tol`.
pub fn bessel_zero(q: &ZeroQuery) -> Result<f64> {
    q.validate()?;
    let br = zero_bracket(q.nu, q.k)?;
    refine(q.nu, q.k, br, seed(q.nu, q.k)?, q.abs_tol)
}

/// j_k(ν) at the default tolerance.
pub fn bessel_zero_nk(nu: f64, k: u32) -> Result<f64> {
    bessel_zero(&ZeroQuery::new(nu, k)?)
}

/// Outcome of comparing j_k(ν) with a threshold without computing the zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroComparison {
    /// j_k(ν) ≤ s.
    pub at_most: bool,
    /// The zero lies within about 5e-10·s of s, so the answer hinges on
    /// rounding.
    pub near: bool,
}

/// Decide j_k(ν) ≤ s from the isolating bracket and the sign of J_ν(s).
pub fn zero_at_most(nu: f64, k: u32, s: f64) -> Result<ZeroComparison> {
    let br = zero_bracket(nu, k)?;
    if s < br.lo {
        return Ok(ZeroComparison { at_most: false, near: false });
    }
    if s > br.hi {
        return Ok(ZeroComparison { at_most: true, near: false });
    }
    let (f, fp) = j_and_jp_default(nu, s)?;
    let near = fp != 0.0 && (f / fp).abs() < 0.5e-9 * s || f == 0.0;
    // Past the zero J_ν has left the sign it had below j_k.
    Ok(ZeroComparison { at_most: f * sign_below(k) <= 0.0, near })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schafheitlin_holds_first_zeros() {
        let (lo, hi) = schafheitlin(0.0, 1).unwrap();
        assert!(lo < 2.404_825_557_695_773 && 2.404_825_557_695_773 < hi);
        let (lo, hi) = schafheitlin(1.0, 1).unwrap();
        assert!(lo < 3.831_705_970_207_512 && 3.831_705_970_207_512 < hi);
        assert!(schafheitlin(10.0, 1).is_none());
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        for k in 1..6 {
            let j = bessel_zero_nk(0.5, k).unwrap();
            assert!((j - k as f64 * PI).abs() < 1e-10);
        }
    }

    #[test]
    fn comparisons_agree_with_refined_zero() {
        let j = bessel_zero_nk(3.0, 2).unwrap();
        assert!(zero_at_most(3.0, 2, j + 1e-6).unwrap().at_most);
        assert!(!zero_at_most(3.0, 2, j - 1e-6).unwrap().at_most);
        assert!(zero_at_most(3.0, 2, j).unwrap().near);
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(ZeroQuery::new(-1.0, 1).is_err());
        assert!(ZeroQuery::new(1.0, 0).is_err());
        assert!(ZeroQuery::with_tol(1.0, 1, 1e-3).is_err());
        assert!(qu_wong_bracket(0.0, 1).is_err());
        assert!(olver_zero_estimate(0.0, 1).is_err());
    }
}
