//! First nodal line of the second Dirichlet eigenfunction of a sector.
//!
//! With ν = π/α the two candidates for λ₂ are j₂(ν)² (eigenfunction
//! J_ν(j₂ r)·sin(νθ), nodal circle r = j₁(ν)/j₂(ν)) and j₁(2ν)²
//! (eigenfunction J_{2ν}(j₁ r)·sin(2νθ), nodal ray θ = α/2). The smaller one
//! wins; they coincide at the critical angle α₀.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::zeros::{bessel_zero, ZeroQuery};

pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-9;
const ZERO_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodalLineKind {
    RadialCircle,
    AngularRay,
    UndefinedCritical,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodalLineClass {
    pub kind: NodalLineKind,
    /// Circle radius or ray angle; `None` at the critical angle.
    pub parameter: Option<f64>,
    pub lambda2: f64,
    pub multiplicity2: u8,
}

fn zero(nu: f64, k: u32) -> Result<f64> {
    bessel_zero(&ZeroQuery::with_tol(nu, k, ZERO_TOL)?)
}

/// j₂(ν) − j₁(2ν).
pub fn zero_gap(nu: f64) -> Result<f64> {
    Ok(zero(nu, 2)? - zero(2.0 * nu, 1)?)
}

pub fn classify_first_nodal_line(alpha: f64, degeneracy_tol: f64) -> Result<NodalLineClass> {
    if !(alpha > 0.0 && alpha < 2.0 * PI) {
        return domain(format!("sector angle must lie in (0, 2pi), got {alpha}"));
    }
    if !(degeneracy_tol >= 0.0) {
        return domain("degeneracy tolerance must be non-negative");
    }
    let nu = PI / alpha;
    let j2 = zero(nu, 2)?;
    let j1_double = zero(2.0 * nu, 1)?;
    Ok(if j2 < j1_double - degeneracy_tol {
        NodalLineClass {
            kind: NodalLineKind::RadialCircle,
            parameter: Some(zero(nu, 1)? / j2),
            lambda2: j2 * j2,
            multiplicity2: 1,
        }
    } else if j2 > j1_double + degeneracy_tol {
        NodalLineClass {
            kind: NodalLineKind::AngularRay,
            parameter: Some(0.5 * alpha),
            lambda2: j1_double * j1_double,
            multiplicity2: 1,
        }
    } else {
        NodalLineClass {
            kind: NodalLineKind::UndefinedCritical,
            parameter: None,
            lambda2: 0.5 * (j2 * j2 + j1_double * j1_double),
            multiplicity2: 2,
        }
    })
}

/// (ν₀, α₀ = π/ν₀) with j₂(ν₀) = j₁(2ν₀).
pub fn critical_angle() -> Result<(f64, f64)> {
    let (mut lo, mut hi) = (1.0, 10.0);
    let mut g_lo = zero_gap(lo)?;
    let g_hi = zero_gap(hi)?;
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::NotBracketed { what: "critical angle", lo, hi });
    }
    // Bisection: the gap is smooth but each evaluation costs two zeros, and
    // 45 halvings already reach the resolution of the zeros themselves.
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        let g = zero_gap(mid)?;
        if g == 0.0 {
            return Ok((mid, PI / mid));
        }
        if g.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    let nu0 = 0.5 * (lo + hi);
    Ok((nu0, PI / nu0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_angles() {
        assert!(classify_first_nodal_line(0.0, 1e-9).is_err());
        assert!(classify_first_nodal_line(2.0 * PI, 1e-9).is_err());
    }

    #[test]
    fn gap_changes_sign() {
        assert!(zero_gap(1.0).unwrap() > 0.0);
        assert!(zero_gap(10.0).unwrap() < 0.0);
    }
}
