//! Bessel functions of the first kind for real order ν > −1.
//!
//! Small arguments (x ≤ c·√(ν+1)) use the Maclaurin series, whose terms then
//! decrease monotonically. Everything else goes through Steed's method: a
//! continued fraction for J′/J, downward recurrence to an order in
//! [−1/2, 1/2] or just below x, and normalisation from either Temme's series
//! (x < 2) or the complex continued fraction for (J′+iY′)/(J+iY).

use std::f64::consts::PI;

use super::airy::airy;
use super::dd::{debye_phase, phase_excess};
use crate::olver::{coefficient_at, Coefficient};
use super::gamma::{gamma, ln_gamma, temme_gammas};
use crate::error::{domain, Error, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const RESCALE_AT: f64 = 1e250;

/// Controls where the Maclaurin series is used and how long it may run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    /// The series is used when x ≤ series_cutoff·√(ν+1).
    pub series_cutoff: f64,
    pub max_terms: usize,
    pub target_rel_err: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy { series_cutoff: 2.0, max_terms: 500, target_rel_err: 1e-17 }
    }
}

impl SeriesPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.series_cutoff > 0.0) || self.max_terms < 20 {
            return domain("series policy: need series_cutoff > 0 and max_terms >= 20");
        }
        if !(self.target_rel_err > 0.0 && self.target_rel_err < 1e-6) {
            return domain("series policy: target_rel_err must lie in (0, 1e-6)");
        }
        Ok(())
    }

    fn uses_series(&self, nu: f64, x: f64) -> bool {
        x <= self.series_cutoff * (nu + 1.0).sqrt()
    }
}

/// J_ν(x) and J′_ν(x) together, plus Y when the Steed path produced it.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Jy {
    pub j: f64,
    pub jp: f64,
    pub y: f64,
    pub yp: f64,
}

fn check_args(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || !x.is_finite() {
        return domain(format!("non-finite input (nu = {nu}, x = {x})"));
    }
    if nu <= -1.0 {
        return domain(format!("order must exceed -1, got {nu}"));
    }
    if x < 0.0 {
        return domain(format!("argument must be non-negative, got {x}"));
    }
    Ok(())
}

/// J_ν(x) for ν > −1, x ≥ 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    bessel_j_with(nu, x, &SeriesPolicy::default())
}

/// [`bessel_j`] with an explicit series policy.
pub fn bessel_j_with(nu: f64, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    check_args(nu, x)?;
    policy.validate()?;
    if x == 0.0 {
        return at_origin(nu);
    }
    Ok(j_and_jp(nu, x, policy)?.0)
}

/// J′_ν(x) = (ν/x)J_ν(x) − J_{ν+1}(x).
pub fn bessel_j_prime(nu: f64, x: f64) -> Result<f64> {
    check_args(nu, x)?;
    if nu < 0.0 {
        return domain(format!("derivative needs a non-negative order, got {nu}"));
    }
    if x == 0.0 {
        return if nu < 1.0 {
            domain("derivative formula is singular at x = 0 for order < 1")
        } else if nu == 1.0 {
            Ok(0.5)
        } else {
            Ok(0.0)
        };
    }
    Ok(nu / x * bessel_j(nu, x)? - bessel_j(nu + 1.0, x)?)
}

/// J_ν(x) and J′_ν(x) from a single evaluation. Requires x > 0.
pub fn bessel_j_and_prime(nu: f64, x: f64) -> Result<(f64, f64)> {
    check_args(nu, x)?;
    if x == 0.0 {
        return domain("bessel_j_and_prime needs x > 0");
    }
    j_and_jp(nu, x, &SeriesPolicy::default())
}

/// Unchecked J, J′ for internal hot loops (ν > −1, x > 0 assumed).
pub(crate) fn j_and_jp_default(nu: f64, x: f64) -> Result<(f64, f64)> {
    j_and_jp(nu, x, &SeriesPolicy::default())
}

fn at_origin(nu: f64) -> Result<f64> {
    if nu == 0.0 {
        Ok(1.0)
    } else if nu > 0.0 {
        Ok(0.0)
    } else {
        domain(format!("J_{nu}(0) is infinite"))
    }
}

pub(crate) fn j_and_jp(nu: f64, x: f64, policy: &SeriesPolicy) -> Result<(f64, f64)> {
    if policy.uses_series(nu, x) {
        return Ok(series(nu, x, policy));
    }
    // The continued fraction loses accuracy roughly in proportion to x in the
    // oscillatory region, so prefer the asymptotic forms whenever they
    // converge to full precision.
    if x >= 25.0 && nu * nu <= 2.0 * x {
        if let Some(r) = hankel(nu, x) {
            return Ok(r);
        }
    }
    if nu >= 4.0 && x > nu {
        if let Some(r) = debye_oscillatory(nu, x) {
            return Ok(r);
        }
    }
    if nu >= UNIFORM_MIN_ORDER && x > nu {
        return Ok((uniform_j(nu, x)?, uniform_j(nu - 1.0, x)? - nu / x * uniform_j(nu, x)?));
    }
    if nu >= 0.0 {
        let r = steed(nu, x)?;
        return Ok((r.j, r.jp));
    }
    // J_{−μ} = cos(μπ)J_μ − sin(μπ)Y_μ
    let mu = -nu;
    let r = steed(mu, x)?;
    let (s, c) = (mu * PI).sin_cos();
    Ok((c * r.j - s * r.y, c * r.jp - s * r.yp))
}

fn series(nu: f64, x: f64, policy: &SeriesPolicy) -> (f64, f64) {
    let h = 0.5 * x;
    let lead = if nu + 1.0 < 170.0 {
        h.powf(nu) / gamma(nu + 1.0)
    } else {
        (nu * h.ln() - ln_gamma(nu + 1.0)).exp()
    };
    let q = -h * h;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut dsum = nu;
    for s in 1..policy.max_terms {
        let s = s as f64;
        term *= q / (s * (nu + s));
        sum += term;
        dsum += (nu + 2.0 * s) * term;
        if term.abs() <= policy.target_rel_err * sum.abs() {
            break;
        }
    }
    (lead * sum, lead * dsum / x)
}

/// Hankel's large-argument expansion. `None` if the series does not reach
/// full precision before its terms start to grow.
fn hankel(nu: f64, x: f64) -> Option<(f64, f64)> {
    let (p0, q0) = hankel_pq(nu, x)?;
    let (p1, q1) = hankel_pq(nu + 1.0, x)?;
    // χ = x − (ν/2 + 1/4)π; reduce the constant part exactly.
    let c = (0.5 * nu + 0.25).rem_euclid(2.0);
    let (sc, cc) = (PI * c).sin_cos();
    let (sx, cx) = x.sin_cos();
    let cos_chi = cx * cc + sx * sc;
    let sin_chi = sx * cc - cx * sc;
    let amp = (2.0 / (PI * x)).sqrt();
    let j = amp * (p0 * cos_chi - q0 * sin_chi);
    // χ_{ν+1} = χ − π/2
    let j1 = amp * (p1 * sin_chi + q1 * cos_chi);
    Some((j, nu / x * j - j1))
}

fn hankel_pq(nu: f64, x: f64) -> Option<(f64, f64)> {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut last = f64::INFINITY;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (8.0 * kf * x);
        let a = term.abs();
        if a == 0.0 {
            return Some((p, q));
        }
        // A single factor can pass near zero, so compare against the larger
        // of the two previous terms.
        if k > 2 && a > last.max(prev) {
            return None;
        }
        prev = last;
        last = a;
        // (−1)^⌊k/2⌋ alternation on each parity.
        let sgn = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sgn * term;
        } else {
            q += sgn * term;
        }
        if a < 1e-17 * (p.abs() + q.abs()) {
            return Some((p, q));
        }
    }
    None
}

const DEBYE_TERMS: usize = 60;

/// Coefficient tables of Debye's polynomials u_k(t) and v_k(t), indexed by
/// power of t.
pub(crate) fn debye_polys() -> &'static (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    static POLYS: std::sync::OnceLock<(Vec<Vec<f64>>, Vec<Vec<f64>>)> = std::sync::OnceLock::new();
    POLYS.get_or_init(|| {
        let mut u: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 0..DEBYE_TERMS {
            let c = &u[k];
            let mut next = vec![0.0; 3 * (k + 1) + 1];
            for (j, &cj) in c.iter().enumerate() {
                if cj == 0.0 {
                    continue;
                }
                let jf = j as f64;
                // ½ t²(1 − t²) u′
                if j > 0 {
                    next[j + 1] += 0.5 * jf * cj;
                    next[j + 3] -= 0.5 * jf * cj;
                }
                // ⅛ ∫ (1 − 5s²) u
                next[j + 1] += cj / (8.0 * (jf + 1.0));
                next[j + 3] -= 5.0 * cj / (8.0 * (jf + 3.0));
            }
            u.push(next);
        }
        let mut v: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 1..=DEBYE_TERMS {
            let mut vk = u[k].clone();
            let prev = &u[k - 1];
            // + t(t² − 1)(½u_{k−1} + t u′_{k−1})
            for (j, &cj) in prev.iter().enumerate() {
                let w = cj * (0.5 + j as f64);
                vk[j + 3] += w;
                vk[j + 1] -= w;
            }
            v.push(vk);
        }
        (u, v)
    })
}

/// Σ_k w_k(i·p)/ν^k split into the real even part and the imaginary odd
/// part (divided by i). `None` if the terms stop shrinking too early.
fn debye_sums(polys: &[Vec<f64>], p: f64, nu: f64) -> Option<(f64, f64)> {
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut scale = 1.0;
    let mut last = f64::INFINITY;
    let mut prev = f64::INFINITY;
    for (k, c) in polys.iter().enumerate() {
        // Only powers with the parity of k occur; i^j folds into a sign.
        let mut val = 0.0;
        let mut pj = if k % 2 == 0 { 1.0 } else { p };
        let p2 = p * p;
        let mut j = k % 2;
        while j < c.len() {
            let sgn = if (j / 2) % 2 == 0 { 1.0 } else { -1.0 };
            val += sgn * c[j] * pj;
            pj *= p2;
            j += 2;
        }
        let term = val * scale;
        let a = term.abs();
        if k > 2 && a > last.max(prev) {
            return None;
        }
        if k % 2 == 0 {
            even += term;
        } else {
            odd += term;
        }
        if k > 0 && a < 2e-16 * (even.abs() + odd.abs()) {
            return Some((even, odd));
        }
        prev = last;
        last = a;
        scale /= nu;
    }
    None
}

/// Below this order the two-term uniform expansion is not accurate enough.
const UNIFORM_MIN_ORDER: f64 = 300.0;

/// Airy-type uniform expansion just past the turning point, x > ν:
/// J_ν(νz) ≈ (4ζ/(1−z²))^¼ [Ai(ν^⅔ζ)(1 + A₁/ν²)/ν^⅓ + Ai′(ν^⅔ζ)(B₀ + B₁/ν²)/ν^{5/3}].
/// Used where Debye's series diverges before it converges; the next
/// omitted term is O(ν⁻⁴).
fn uniform_j(nu: f64, x: f64) -> Result<f64> {
    let (phi, w) = phase_excess(nu, x);
    let phi = phi.hi + phi.lo;
    // −ζ = (3φ/2ν)^⅔ and z² − 1 = (w/ν)², so nothing cancels.
    let t = -(1.5 * phi).powf(2.0 / 3.0);
    let zeta = t / nu.powf(2.0 / 3.0);
    let tau = w / nu;
    let pref = (-4.0 * zeta / (tau * tau)).powf(0.25);
    let z = x / nu;
    let nu2 = nu * nu;
    let a = 1.0 + coefficient_at(Coefficient::A1, z, zeta) / nu2;
    let b = coefficient_at(Coefficient::B0, z, zeta) + coefficient_at(Coefficient::B1, z, zeta) / nu2;
    let ai = airy(t)?;
    Ok(pref * (ai.ai * a / nu.cbrt() + ai.aip * b / nu.powf(5.0 / 3.0)))
}

/// Debye's expansion for x > ν: J_ν(ν sec β) with p = cot β.
fn debye_oscillatory(nu: f64, x: f64) -> Option<(f64, f64)> {
    let w = ((x - nu) * (x + nu)).sqrt();
    let p = nu / w;
    if p * p * p > 0.25 * nu {
        return None;
    }
    let (u, v) = debye_polys();
    let (ue, uo) = debye_sums(u, p, nu)?;
    let (ve, vo) = debye_sums(v, p, nu)?;
    // ξ = √(x²−ν²) − ν·arccos(ν/x) − π/4
    // The phase cancels terms of size x, so it is formed in double-double
    // and the low word folded in after the reduction.
    let xi = debye_phase(nu, x);
    let (s0, c0) = xi.hi.sin_cos();
    let (s, c) = (s0 + c0 * xi.lo, c0 - s0 * xi.lo);
    let a = (2.0 / (PI * w)).sqrt();
    let b = (2.0 * w / (PI * x * x)).sqrt();
    Some((a * (c * ue + s * uo), b * (-s * ve + c * vo)))
}

/// Steed's method for ν ≥ 0, x > 0.
pub(crate) fn steed(nu: f64, x: f64) -> Result<Jy> {
    let nl = if x < 2.0 {
        (nu + 0.5) as usize
    } else {
        (nu - x + 1.5).max(0.0) as usize
    };
    let xmu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J′_ν/J_ν by modified Lentz.
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let max_iter = 20_000 + 2 * x as usize;
    let mut converged = false;
    for _ in 0..max_iter {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { what: "Bessel CF1", lo: nu, hi: x });
    }

    // Downward recurrence from ν to μ, with rescaling against overflow.
    let mut rjl = isign * 1e-250;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let t = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * t - rjl;
        rjl = t;
        if rjl.abs() > RESCALE_AT {
            rjl /= RESCALE_AT;
            rjpl /= RESCALE_AT;
            rjl1 /= RESCALE_AT;
            rjp1 /= RESCALE_AT;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, rymu, mut ry1) = if x < 2.0 {
        temme_y(xmu, x, f, w)?
    } else {
        steed_cf2(xmu, x, f, w, rjl)?
    };

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let jp = rjp1 * scale;

    let mut ymu = rymu;
    for i in 1..=nl {
        let t = (xmu + i as f64) * xi2 * ry1 - ymu;
        ymu = ry1;
        ry1 = t;
    }
    let y = ymu;
    let yp = nu * xi * ymu - ry1;
    Ok(Jy { j, jp, y, yp })
}

/// Temme's series for Y_μ, Y_{μ+1} with |μ| ≤ 1/2; J_μ from the Wronskian.
fn temme_y(xmu: f64, x: f64, f: f64, w: f64) -> Result<(f64, f64, f64)> {
    let xmu2 = xmu * xmu;
    let xi2 = 2.0 / x;
    let x2 = 0.5 * x;
    let pimu = PI * xmu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = xmu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
    let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let e = e.exp();
    let mut p = e / (gampl * PI);
    let mut q = 1.0 / (e * PI * gammi);
    let pimu2 = 0.5 * pimu;
    let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
    let r = PI * pimu2 * fact3 * fact3;
    let mut c = 1.0;
    let dd = -x2 * x2;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    let mut ok = false;
    for i in 1..10_000 {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - xmu2);
        c *= dd / fi;
        p /= fi - xmu;
        q /= fi + xmu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * EPS {
            ok = true;
            break;
        }
    }
    if !ok {
        return Err(Error::NoConvergence { what: "Temme series", lo: xmu, hi: x });
    }
    let rymu = -sum;
    let ry1 = -sum1 * xi2;
    let rymup = xmu / x * rymu - ry1;
    let rjmu = w / (rymup - f * rymu);
    Ok((rjmu, rymu, ry1))
}

/// Steed's CF2 for p + iq = (J′+iY′)/(J+iY) at order μ, x ≥ 2.
fn steed_cf2(xmu: f64, x: f64, f: f64, w: f64, rjl: f64) -> Result<(f64, f64, f64)> {
    let xi = 1.0 / x;
    let mut a = 0.25 - xmu * xmu;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fact = a * xi / (p * p + q * q);
    let mut cr = br + q * fact;
    let mut ci = bi + p * fact;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut ok = false;
    for i in 2..100_000 {
        a += 2.0 * (i - 1) as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            ok = true;
            break;
        }
    }
    if !ok {
        return Err(Error::NoConvergence { what: "Bessel CF2", lo: xmu, hi: x });
    }
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let ry1 = xmu * xi * rymu - rymup;
    Ok((rjmu, rymu, ry1))
}
