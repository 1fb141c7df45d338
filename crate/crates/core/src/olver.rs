//! Uniform (Airy-type) asymptotics of J_n(nz) and the error envelope of the
//! one-term phase approximation cos(η − π/4).
//!
//! The coefficient functions A₁, B₀, B₁ are evaluated from Debye's
//! polynomials and the Airy coefficients u_j, v_j. Near the turning point
//! the closed forms cancel badly, so a least-squares polynomial in ζ takes
//! over for |ζ| < [`NEAR_TURNING`].

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{domain, Error, Result};
use crate::specfun::{airy, airy_uv, bessel_j, debye_polys, gamma};

/// Below this |ζ| the fitted polynomial replaces the closed forms.
pub const NEAR_TURNING: f64 = 0.15;
const FIT_OUTER: f64 = 0.7;
const FIT_DEGREE: usize = 18;

pub const U1: f64 = 5.0 / 72.0;
pub const V1: f64 = -7.0 / 72.0;
/// sup |A₁(ζ)| over ζ < 0.
pub const S1: f64 = 1.0 / 225.0;
/// Coefficients of the δ₃ and ε₃ bounds.
pub const DELTA3_COEF: f64 = 0.013227;
pub const EPS3_COEF: f64 = 0.008352;
pub const EPS3_EXP: f64 = 0.218423;

/// Airy expansion coefficient u_s = 2^s Γ(3s+½) / (√π 3^{3s} Γ(2s+1)).
pub fn airy_u(s: u32) -> f64 {
    let sf = s as f64;
    2f64.powf(sf) * gamma(3.0 * sf + 0.5) / (PI.sqrt() * 27f64.powf(sf) * gamma(2.0 * sf + 1.0))
}

/// v_s = −(6s+1)/(6s−1)·u_s.
pub fn airy_v(s: u32) -> f64 {
    if s == 0 {
        return 1.0;
    }
    let sf = s as f64;
    -(6.0 * sf + 1.0) / (6.0 * sf - 1.0) * airy_u(s)
}

/// η(x, n) = √(x² − n²) − n·arccos(n/x).
pub fn eta(x: f64, n: f64) -> Result<f64> {
    if !(x.is_finite() && n.is_finite()) || n < 0.0 || x <= n {
        return domain(format!("eta needs x > n >= 0 (x = {x}, n = {n})"));
    }
    Ok(eta_unchecked(x, n))
}

pub(crate) fn eta_unchecked(x: f64, n: f64) -> f64 {
    let w = ((x - n) * (x + n)).sqrt();
    if n == 0.0 {
        return w;
    }
    w - n * (w / n).atan()
}

/// Checks 1 < (1−y)^{3/2}/η̃(y) < (3/4)√2 with η̃(y) = √(1−y²) − y·arccos(y).
pub fn eta_tilde_bounds(y: f64) -> Result<(bool, bool)> {
    if !(y > 0.0 && y < 1.0) {
        return domain(format!("eta_tilde_bounds needs 0 < y < 1, got {y}"));
    }
    let r = (1.0 - y).powf(1.5) / eta_unchecked(1.0, y);
    Ok((r > 1.0, r < 0.75 * 2f64.sqrt()))
}

/// s − atan(s), accurate for small s.
fn s_minus_atan(s: f64) -> f64 {
    if s < 0.25 {
        let s2 = s * s;
        let mut term = s * s2;
        let mut sum = 0.0;
        let mut k = 3.0;
        let mut sign = 1.0;
        while term > 1e-20 * s * s2 {
            sum += sign * term / k;
            term *= s2;
            k += 2.0;
            sign = -sign;
        }
        sum
    } else {
        s - s.atan()
    }
}

/// atanh(q) − q for 0 < q < 1, with z = √(1−q²) supplied for the log form.
fn atanh_minus(q: f64, z: f64) -> f64 {
    if q < 0.25 {
        let q2 = q * q;
        let mut term = q * q2;
        let mut sum = 0.0;
        let mut k = 3.0;
        while term > 1e-20 * q * q2 {
            sum += term / k;
            term *= q2;
            k += 2.0;
        }
        sum
    } else {
        ((1.0 + q) / z).ln() - q
    }
}

/// The turning-point variable ζ(z); positive for z < 1, negative for z > 1.
pub fn zeta_map(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return domain(format!("zeta_map needs z > 0, got {z}"));
    }
    Ok(zeta_unchecked(z))
}

pub(crate) fn zeta_unchecked(z: f64) -> f64 {
    if z == 1.0 {
        0.0
    } else if z > 1.0 {
        let s = ((z - 1.0) * (z + 1.0)).sqrt();
        -(1.5 * s_minus_atan(s)).powf(2.0 / 3.0)
    } else {
        let q = ((1.0 - z) * (1.0 + z)).sqrt();
        (1.5 * atanh_minus(q, z)).powf(2.0 / 3.0)
    }
}

/// Inverse of ζ on the z > 1 branch: the z with ζ(z) = zeta < 0.
pub fn zeta_inverse_neg(zeta: f64) -> Result<f64> {
    if !(zeta < 0.0) {
        return domain(format!("zeta_inverse_neg needs zeta < 0, got {zeta}"));
    }
    // Solve s − atan(s) = r, then z = √(1 + s²).
    let r = 2.0 / 3.0 * (-zeta).powf(1.5);
    // s − atan s is convex and increasing, so Newton from the right of the
    // root converges monotonically.
    let mut s = if r > 1.0 { r + 0.5 * PI } else { (3.0 * r).cbrt() * (1.0 + 0.5 * r) + 1e-3 };
    for _ in 0..100 {
        let f = s_minus_atan(s) - r;
        let fp = s * s / (1.0 + s * s);
        let step = f / fp;
        s -= step;
        if step.abs() <= 1e-15 * s {
            break;
        }
    }
    Ok((1.0 + s * s).sqrt())
}

/// Which Olver coefficient function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficient {
    A1,
    B0,
    B1,
}

/// Direct evaluation from Debye polynomials.
///
/// With w = ζ^{-1}, τ = t² = 1/(1 − z²) and h = ζ^{-1/2}·t (all real on both
/// sides of the turning point, h = −t₁/√(−ζ) for z > 1), every term of
///   A_s = Σ (3/2)^j v_j ζ^{-3j/2} U_{2s−j}(t)
///   B_s = −ζ^{-1/2} Σ (3/2)^j u_j ζ^{-3j/2} U_{2s+1−j}(t)
/// becomes a real product of powers of w, τ and at most one factor h.
fn closed_form(which: Coefficient, z: f64, zeta: f64) -> f64 {
    let (u_dbye, _) = debye_polys();
    let (ua, va) = airy_uv();
    let w = 1.0 / zeta;
    let tau = 1.0 / ((1.0 - z) * (1.0 + z));
    let h = if z < 1.0 {
        (tau / zeta).sqrt()
    } else {
        -(-tau / -zeta).sqrt()
    };
    // Σ c_i τ^{(i−p)/2} over the terms of U_m, p = parity of m.
    let poly = |m: usize| -> f64 {
        let c = &u_dbye[m];
        let mut acc = 0.0;
        let mut tp = 1.0;
        let mut i = m % 2;
        while i < c.len() {
            acc += c[i] * tp;
            tp *= tau;
            i += 2;
        }
        acc
    };
    let (s, is_b) = match which {
        Coefficient::A1 => (1usize, false),
        Coefficient::B0 => (0, true),
        Coefficient::B1 => (1, true),
    };
    let mut total = 0.0;
    if !is_b {
        for j in 0..=2 * s {
            let c = 1.5f64.powi(j as i32) * va[j];
            let m = 2 * s - j;
            total += if j % 2 == 0 {
                c * w.powi((3 * j / 2) as i32) * poly(m)
            } else {
                c * w.powi(((3 * j - 1) / 2) as i32) * h * poly(m)
            };
        }
    } else {
        for j in 0..=2 * s + 1 {
            let c = 1.5f64.powi(j as i32) * ua[j];
            let m = 2 * s + 1 - j;
            total -= if j % 2 == 0 {
                c * w.powi((3 * j / 2) as i32) * h * poly(m)
            } else {
                c * w.powi(((3 * j + 1) / 2) as i32) * poly(m)
            };
        }
    }
    total
}

/// Householder least squares; `rows` is row-major with `cols` columns.
fn lstsq(mut a: Vec<f64>, mut b: Vec<f64>, cols: usize) -> Vec<f64> {
    let rows = b.len();
    for k in 0..cols {
        let mut norm = 0.0;
        for i in k..rows {
            norm += a[i * cols + k] * a[i * cols + k];
        }
        let norm = norm.sqrt();
        let alpha = if a[k * cols + k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..rows).map(|i| a[i * cols + k]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k..cols {
            let dot: f64 = (k..rows).map(|i| v[i - k] * a[i * cols + j]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..rows {
                a[i * cols + j] -= f * v[i - k];
            }
        }
        let dot: f64 = (k..rows).map(|i| v[i - k] * b[i]).sum();
        let f = 2.0 * dot / vnorm2;
        for i in k..rows {
            b[i] -= f * v[i - k];
        }
    }
    let mut x = vec![0.0; cols];
    for k in (0..cols).rev() {
        let mut s = b[k];
        for j in k + 1..cols {
            s -= a[k * cols + j] * x[j];
        }
        x[k] = s / a[k * cols + k];
    }
    x
}

fn chebyshev_row(u: f64, degree: usize) -> Vec<f64> {
    let mut row = vec![1.0; degree + 1];
    if degree > 0 {
        row[1] = u;
    }
    for i in 2..=degree {
        row[i] = 2.0 * u * row[i - 1] - row[i - 2];
    }
    row
}

fn chebyshev_eval(c: &[f64], u: f64) -> f64 {
    // Clenshaw
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let t = 2.0 * u * b1 - b2 + ck;
        b2 = b1;
        b1 = t;
    }
    u * b1 - b2 + c[0]
}

/// Sample points (ζ, value) of the closed form on one or both sides of the
/// turning point, with NEAR_TURNING ≤ |ζ| ≤ FIT_OUTER.
fn fit_samples(which: Coefficient, neg: bool, pos: bool) -> (Vec<f64>, Vec<f64>) {
    let mut zs = Vec::new();
    let mut vals = Vec::new();
    let per_side = 240;
    for side in [neg, pos].iter().enumerate().filter(|(_, on)| **on).map(|(i, _)| i) {
        for i in 0..per_side {
            let mag = NEAR_TURNING + (FIT_OUTER - NEAR_TURNING) * i as f64 / (per_side - 1) as f64;
            let zeta = if side == 0 { -mag } else { mag };
            let z = z_of_zeta(zeta);
            zs.push(zeta);
            vals.push(closed_form(which, z, zeta));
        }
    }
    (zs, vals)
}

/// z(ζ) on either branch.
fn z_of_zeta(zeta: f64) -> f64 {
    if zeta < 0.0 {
        return zeta_inverse_neg(zeta).expect("negative zeta");
    }
    // Bisection on z ∈ (0, 1); ζ is decreasing in z.
    let (mut lo, mut hi) = (1e-300f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if zeta_unchecked(mid) > zeta {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-17 {
            break;
        }
    }
    0.5 * (lo + hi)
}

fn fit(which: Coefficient, neg: bool, pos: bool, degree: usize) -> Vec<f64> {
    let (zs, vals) = fit_samples(which, neg, pos);
    let cols = degree + 1;
    let mut a = Vec::with_capacity(zs.len() * cols);
    for &z in &zs {
        a.extend(chebyshev_row(z / FIT_OUTER, degree));
    }
    lstsq(a, vals, cols)
}

fn near_fits() -> &'static [Vec<f64>; 3] {
    static FITS: OnceLock<[Vec<f64>; 3]> = OnceLock::new();
    FITS.get_or_init(|| {
        [
            fit(Coefficient::A1, true, true, FIT_DEGREE),
            fit(Coefficient::B0, true, true, FIT_DEGREE),
            fit(Coefficient::B1, true, true, FIT_DEGREE),
        ]
    })
}

fn fit_index(which: Coefficient) -> usize {
    match which {
        Coefficient::A1 => 0,
        Coefficient::B0 => 1,
        Coefficient::B1 => 2,
    }
}

/// A₁, B₀ or B₁ at ζ(z).
pub fn coefficient(which: Coefficient, z: f64) -> Result<f64> {
    let zeta = zeta_map(z)?;
    Ok(coefficient_at(which, z, zeta))
}

pub(crate) fn coefficient_at(which: Coefficient, z: f64, zeta: f64) -> f64 {
    if zeta.abs() < NEAR_TURNING {
        chebyshev_eval(&near_fits()[fit_index(which)], zeta / FIT_OUTER)
    } else {
        closed_form(which, z, zeta)
    }
}

pub fn coeff_a1(z: f64) -> Result<f64> {
    coefficient(Coefficient::A1, z)
}

pub fn coeff_b0(z: f64) -> Result<f64> {
    coefficient(Coefficient::B0, z)
}

pub fn coeff_b1(z: f64) -> Result<f64> {
    coefficient(Coefficient::B1, z)
}

/// Values at ζ = 0 extrapolated separately from each side of the turning
/// point, next to the value of the two-sided fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningLimit {
    pub which: Coefficient,
    pub from_below: f64,
    pub from_above: f64,
    pub two_sided: f64,
}

pub fn turning_point_limit(which: Coefficient) -> TurningLimit {
    let deg = 12;
    let below = fit(which, true, false, deg);
    let above = fit(which, false, true, deg);
    TurningLimit {
        which,
        from_below: chebyshev_eval(&below, 0.0),
        from_above: chebyshev_eval(&above, 0.0),
        two_sided: chebyshev_eval(&near_fits()[fit_index(which)], 0.0),
    }
}

/// Which of B₀, B₁ a variation report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariationTarget {
    B0,
    B1,
}

impl VariationTarget {
    fn coefficient(self) -> Coefficient {
        match self {
            VariationTarget::B0 => Coefficient::B0,
            VariationTarget::B1 => Coefficient::B1,
        }
    }
}

/// Total variation of g(z) = |ζ(z)|^{1/2} B_s(ζ(z)) over z ∈ (0, ∞).
#[derive(Debug, Clone, PartialEq)]
pub struct VariationReport {
    pub which: VariationTarget,
    pub stationary_points_z: Vec<f64>,
    pub values_at_points: Vec<f64>,
    /// Stationary points plus the turning point z = 1 (where g = 0),
    /// ordered by z; this is the set the variation is summed over.
    pub critical_points: Vec<(f64, f64)>,
    pub limit_at_zero: f64,
    pub limit_at_infinity: f64,
    pub total_variation: f64,
}

impl VariationReport {
    /// Re-assemble the variation from the listed limits and critical values.
    pub fn assembled(&self) -> f64 {
        assemble(self.limit_at_zero, &self.critical_points, self.limit_at_infinity)
    }
}

fn assemble(lim0: f64, crit: &[(f64, f64)], lim_inf: f64) -> f64 {
    let mut prev = lim0;
    let mut tv = 0.0;
    for &(_, g) in crit {
        tv += (g - prev).abs();
        prev = g;
    }
    tv + (lim_inf - prev).abs()
}

/// g(z) = |ζ|^{1/2}·B_s(ζ).
pub fn scaled_b(which: VariationTarget, z: f64) -> Result<f64> {
    let zeta = zeta_map(z)?;
    Ok(zeta.abs().sqrt() * coefficient_at(which.coefficient(), z, zeta))
}

fn g_prime(which: VariationTarget, z: f64) -> f64 {
    // g loses a few digits to cancellation, so use a wide five-point stencil
    // kept clear of the kink at z = 1.
    let h = (1e-3 * z).min(0.2 * (z - 1.0).abs());
    let g = |t: f64| scaled_b(which, t).unwrap_or(f64::NAN);
    (8.0 * (g(z + h) - g(z - h)) - (g(z + 2.0 * h) - g(z - 2.0 * h))) / (12.0 * h)
}

const SCAN_POINTS: usize = 10_000;

pub fn variation_report(which: VariationTarget) -> Result<VariationReport> {
    let mut stationary = Vec::new();
    for (a, b) in [(1e-4f64, 1.0f64), (1.0, 1e3)] {
        let la = a.ln();
        let lb = b.ln();
        let grid = |i: usize| (la + (lb - la) * i as f64 / SCAN_POINTS as f64).exp();
        let mut z_prev = grid(1);
        let mut d_prev = g_prime(which, z_prev);
        for i in 2..SCAN_POINTS {
            let z = grid(i);
            let d = g_prime(which, z);
            if d_prev.signum() != d.signum() && d != 0.0 {
                stationary.push(bisect_derivative(which, z_prev, z, d_prev)?);
            }
            z_prev = z;
            d_prev = d;
        }
    }
    let values: Vec<f64> = stationary.iter().map(|&z| scaled_b(which, z)).collect::<Result<_>>()?;
    let mut critical: Vec<(f64, f64)> = stationary.iter().copied().zip(values.iter().copied()).collect();
    critical.push((1.0, 0.0));
    critical.sort_by(|p, q| p.0.total_cmp(&q.0));
    let (u_dbye, _) = debye_polys();
    let s_index = match which {
        VariationTarget::B0 => 1,
        VariationTarget::B1 => 3,
    };
    // As z → 0, ζ^{1/2}B_s(ζ) → −U_{2s+1}(1).
    let lim0 = -u_dbye[s_index].iter().sum::<f64>();
    let lim_inf = 0.0;
    let tv = assemble(lim0, &critical, lim_inf);
    Ok(VariationReport {
        which,
        stationary_points_z: stationary,
        values_at_points: values,
        critical_points: critical,
        limit_at_zero: lim0,
        limit_at_infinity: lim_inf,
        total_variation: tv,
    })
}

fn bisect_derivative(which: VariationTarget, mut lo: f64, mut hi: f64, d_lo: f64) -> Result<f64> {
    for _ in 0..200 {
        if hi - lo <= 1e-12 {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        let d = g_prime(which, mid);
        if d.signum() == d_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence { what: "stationary point bisection", lo, hi })
}

/// sup over x of π·√|x|·M²(x), with M² = 2·Ai·Bi for x ≥ c and Ai² + Bi²
/// for x < c, where c is the largest root of Ai = Bi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupLambda {
    pub sup_value: f64,
    pub argmax_x: f64,
    pub c: f64,
    pub ai_at_c: f64,
}

fn modulus_weight(x: f64, c: f64) -> f64 {
    let a = airy(x).expect("finite");
    let m2 = if x >= c { 2.0 * a.ai * a.bi } else { a.ai * a.ai + a.bi * a.bi };
    PI * x.abs().sqrt() * m2
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, what: &'static str) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo.signum() == fhi.signum() {
        return Err(Error::NotBracketed { what, lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

pub fn sup_lambda() -> Result<SupLambda> {
    let c = bisect(
        |x| {
            let a = airy(x).expect("finite");
            a.ai - a.bi
        },
        -1.0,
        0.0,
        "Ai = Bi crossing",
    )?;
    // Coarse scan for the global maximum, then the root of the analytic
    // derivative of 2π√x·Ai·Bi on its side of c.
    let mut best = (f64::NEG_INFINITY, 0.0);
    let n = 6000;
    for i in 0..=n {
        let x = -50.0 + 60.0 * i as f64 / n as f64;
        let v = modulus_weight(x, c);
        if v > best.0 {
            best = (v, x);
        }
    }
    let x0 = best.1;
    if x0 <= c {
        return domain("maximum of the Airy modulus weight expected to the right of c");
    }
    let dfun = |x: f64| {
        let a = airy(x).expect("finite");
        a.ai * a.bi / (2.0 * x.sqrt()) + x.sqrt() * (a.aip * a.bi + a.ai * a.bip)
    };
    let step = 60.0 / n as f64;
    let xm = bisect(dfun, (x0 - step).max(1e-6), x0 + step, "Airy modulus maximum")?;
    Ok(SupLambda { sup_value: modulus_weight(xm, c), argmax_x: xm, c, ai_at_c: airy(c)?.ai })
}

/// Constants A and B of |f_n(x) − cos(η − π/4)| ≤ A/n + B/η.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeConstants {
    /// A with s₂ at full precision.
    pub a: f64,
    /// A with s₂ rounded to six decimals, the rounding used for the
    /// published figure.
    pub a_rounded_s2: f64,
    pub b: f64,
    pub s2: f64,
}

pub fn envelope_a(s2: f64) -> f64 {
    let e5 = (5.0f64 / 36.0).exp() * 45.0 / 74.0;
    let e7 = (7.0f64 / 36.0).exp() * 65.0 / 74.0;
    s2 + S1 + U1 * S1 + e5 * S1 + V1.abs() * s2 + e7 * s2 + EPS3_COEF * PI.sqrt() * EPS3_EXP.exp()
}

pub fn envelope_b() -> f64 {
    U1 + (5.0f64 / 36.0).exp() * 45.0 / 74.0
}

pub fn envelope_constants() -> Result<EnvelopeConstants> {
    let s2 = stationary_value_b0()?;
    let rounded = (s2 * 1e6).round() / 1e6;
    Ok(EnvelopeConstants { a: envelope_a(s2), a_rounded_s2: envelope_a(rounded), b: envelope_b(), s2 })
}

/// s₂, the stationary value of |ζ|^{1/2}B₀(ζ) on ζ < 0.
pub fn stationary_value_b0() -> Result<f64> {
    static S2: OnceLock<f64> = OnceLock::new();
    if let Some(v) = S2.get() {
        return Ok(*v);
    }
    let rep = variation_report(VariationTarget::B0)?;
    let v = rep
        .stationary_points_z
        .iter()
        .zip(&rep.values_at_points)
        .find(|(z, _)| **z > 1.0)
        .map(|(_, v)| *v)
        .ok_or(Error::Domain("no stationary point of B0 beyond the turning point".into()))?;
    Ok(*S2.get_or_init(|| v))
}

/// Everything about the uniform approximation at one (n, x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformApproxReport {
    pub n: f64,
    pub x: f64,
    pub eta: f64,
    pub zeta: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub f_hat: f64,
    pub f_direct: f64,
    pub r2_bound: f64,
    pub r2p_bound: f64,
    pub envelope: f64,
    pub delta3_bound: f64,
    pub eps3_bound: f64,
}

/// Smallest admissible x − n at a given x.
pub fn uniform_gap(x: f64) -> f64 {
    (0.75 * 2f64.sqrt()).powf(2.0 / 3.0) * x.cbrt()
}

pub fn uniform_approx(n: f64, x: f64) -> Result<UniformApproxReport> {
    if !(n > 0.0 && x > n && n.is_finite() && x.is_finite()) {
        return domain(format!("uniform_approx needs x > n > 0 (n = {n}, x = {x})"));
    }
    if n >= x - uniform_gap(x) {
        return domain(format!("uniform_approx: n = {n} too close to x = {x}"));
    }
    let s2 = stationary_value_b0()?;
    let eta = eta_unchecked(x, n);
    let z = x / n;
    let zeta = zeta_unchecked(z);
    let a1 = coefficient_at(Coefficient::A1, z, zeta);
    let b0 = coefficient_at(Coefficient::B0, z, zeta);
    let (s, c) = (eta - 0.25 * PI).sin_cos();
    let theta1 = c + s * U1 / eta;
    let theta2 = s - c * V1 / eta;
    let f_hat = theta1 + theta1 * a1 / (n * n) + theta2 * (-zeta).sqrt() * b0 / n;
    let f_direct = (0.5 * PI).sqrt() * ((x - n) * (x + n)).powf(0.25) * bessel_j(n, x)?;
    let r2 = (5.0 / (36.0 * eta)).exp() * (45.0 / 74.0) / (eta * eta);
    let r2p = (7.0 / (36.0 * eta)).exp() * (65.0 / 74.0) / (eta * eta);
    let tail = (EPS3_EXP / n).exp() / (n * n * n);
    let delta3 = DELTA3_COEF * tail;
    let eps3 = EPS3_COEF * tail;
    let n2 = n * n;
    let envelope = U1 / eta
        + s2 / n
        + (r2 + S1 / n2 + U1 * S1 / (n2 * eta) + r2 * S1 / n2 + V1.abs() * s2 / (n * eta) + r2p * s2 / n
            + PI.sqrt() * eps3);
    Ok(UniformApproxReport {
        n,
        x,
        eta,
        zeta,
        theta1,
        theta2,
        f_hat,
        f_direct,
        r2_bound: r2,
        r2p_bound: r2p,
        envelope,
        delta3_bound: delta3,
        eps3_bound: eps3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn airy_coefficients() {
        assert!((airy_u(1) - U1).abs() < 1e-15);
        assert!((airy_v(1) - V1).abs() < 1e-15);
        let (u, v) = airy_uv();
        assert!((u[2] - 385.0 / 10368.0).abs() < 1e-16);
        assert!((v[2] + 455.0 / 10368.0).abs() < 1e-16);
    }

    #[test]
    fn b0_closed_form_matches_textbook_expression() {
        // ζ < 0: B₀ = −5/(48ζ²) + (−ζ)^{-1/2}(5t₁³ + 3t₁)/24
        for &z in &[1.3, 2.0, 7.5] {
            let zeta = zeta_unchecked(z);
            let t1 = 1.0 / ((z * z - 1.0) as f64).sqrt();
            let want = -5.0 / (48.0 * zeta * zeta) + (5.0 * t1.powi(3) + 3.0 * t1) / (24.0 * (-zeta).sqrt());
            assert!((closed_form(Coefficient::B0, z, zeta) - want).abs() < 1e-15);
        }
        // ζ > 0: B₀ = −5/(48ζ²) − (3t − 5t³)/(24ζ^{1/2})
        for &z in &[0.2, 0.6] {
            let zeta = zeta_unchecked(z);
            let t = 1.0 / ((1.0 - z * z) as f64).sqrt();
            let want = -5.0 / (48.0 * zeta * zeta) - (3.0 * t - 5.0 * t.powi(3)) / (24.0 * zeta.sqrt());
            assert!((closed_form(Coefficient::B0, z, zeta) - want).abs() < 1e-15);
        }
    }

    #[test]
    fn inverse_zeta() {
        for &z in &[1.0001, 1.05, 1.5, 3.0, 40.0, 1e3] {
            let back = zeta_inverse_neg(zeta_unchecked(z)).unwrap();
            assert!((back - z).abs() < 1e-12 * z, "z = {z}: {back}");
        }
        for &zeta in &[0.1, 0.5, 2.0] {
            assert!((zeta_unchecked(z_of_zeta(zeta)) - zeta).abs() < 1e-13);
        }
    }

    #[test]
    fn fit_is_continuous_with_closed_form() {
        for which in [Coefficient::A1, Coefficient::B0, Coefficient::B1] {
            for zeta in [-NEAR_TURNING, NEAR_TURNING] {
                let z = z_of_zeta(zeta);
                let fitted = chebyshev_eval(&near_fits()[fit_index(which)], zeta / FIT_OUTER);
                let direct = closed_form(which, z, zeta);
                assert!((fitted - direct).abs() < 1e-10, "{which:?} at {zeta}: {fitted} vs {direct}");
            }
        }
    }

    #[test]
    fn domain_checks() {
        assert!(eta(1.0, 1.0).is_err());
        assert!(zeta_map(0.0).is_err());
        assert!(eta_tilde_bounds(1.0).is_err());
        assert!(uniform_approx(10.0, 11.0).is_err());
    }
}
