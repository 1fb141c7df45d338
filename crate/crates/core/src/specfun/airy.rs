//! Airy functions Ai, Bi with derivatives, and the zeros of Ai.
//!
//! Evaluation never touches the Bessel code: Maclaurin series near the
//! origin, the standard asymptotic expansions for |t| ≥ 9 (Bi: t > 10),
//! and Taylor stepping of w″ = t·w to connect the two.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Ai(0) and −Ai′(0).
const C1: f64 = 0.355_028_053_887_817_239;
const C2: f64 = 0.258_819_403_792_806_798;
const SQRT3: f64 = 1.732_050_807_568_877_2;

const ASYM_AT: f64 = 9.0;
const BI_SERIES_MAX: f64 = 10.0;
const STEP: f64 = 0.5;

/// Ai, Ai′, Bi, Bi′ at a single point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Airy {
    pub ai: f64,
    pub aip: f64,
    pub bi: f64,
    pub bip: f64,
}

pub fn airy(t: f64) -> Result<Airy> {
    if !t.is_finite() {
        return domain(format!("airy: non-finite argument {t}"));
    }
    Ok(if t >= 0.0 { airy_pos(t) } else { airy_neg(t) })
}

fn airy_pos(t: f64) -> Airy {
    let (ai, aip) = if t <= 1.0 {
        let s = maclaurin(t);
        (s.ai, s.aip)
    } else if t >= ASYM_AT {
        ai_asym(t)
    } else {
        let (a, ap) = ai_asym(ASYM_AT);
        taylor_walk(ASYM_AT, a, ap, t)
    };
    let (bi, bip) = if t <= BI_SERIES_MAX {
        let s = maclaurin(t);
        (s.bi, s.bip)
    } else {
        bi_asym(t)
    };
    Airy { ai, aip, bi, bip }
}

fn airy_neg(t: f64) -> Airy {
    if t >= -1.0 {
        return maclaurin(t);
    }
    if t <= -ASYM_AT {
        return asym_neg(-t);
    }
    let a0 = maclaurin(0.0);
    let (ai, aip) = taylor_walk(0.0, a0.ai, a0.aip, t);
    let (bi, bip) = taylor_walk(0.0, a0.bi, a0.bip, t);
    Airy { ai, aip, bi, bip }
}

/// Maclaurin series: f, g are the even/odd-type solutions with
/// Ai = c1 f − c2 g, Bi = √3 (c1 f + c2 g).
fn maclaurin(t: f64) -> Airy {
    let t3 = t * t * t;
    let mut a = 1.0;
    let mut f = 1.0;
    let mut b = t;
    let mut g = t;
    let mut d = 0.5 * t * t;
    let mut fp = d;
    let mut e = 1.0;
    let mut gp = 1.0;
    for k in 0..200 {
        let k3 = 3.0 * k as f64;
        a *= t3 / ((k3 + 2.0) * (k3 + 3.0));
        b *= t3 / ((k3 + 3.0) * (k3 + 4.0));
        if k > 0 {
            d *= t3 / (k3 * (k3 + 2.0));
        }
        e *= t3 / ((k3 + 1.0) * (k3 + 3.0));
        f += a;
        g += b;
        if k > 0 {
            fp += d;
        }
        gp += e;
        let tiny = 1e-18;
        if a.abs() <= tiny * f.abs()
            && b.abs() <= tiny * g.abs().max(1e-300)
            && d.abs() <= tiny * fp.abs().max(1e-300)
            && e.abs() <= tiny * gp.abs()
        {
            break;
        }
    }
    Airy {
        ai: C1 * f - C2 * g,
        aip: C1 * fp - C2 * gp,
        bi: SQRT3 * (C1 * f + C2 * g),
        bip: SQRT3 * (C1 * fp + C2 * gp),
    }
}

/// Integrate w″ = t·w from (t0, w, w′) to t1 by local Taylor series.
fn taylor_walk(t0: f64, w0: f64, wp0: f64, t1: f64) -> (f64, f64) {
    let n = ((t1 - t0).abs() / STEP).ceil().max(1.0) as usize;
    let h = (t1 - t0) / n as f64;
    let (mut t, mut w, mut wp) = (t0, w0, wp0);
    for _ in 0..n {
        let (nw, nwp) = taylor_step(t, w, wp, h);
        w = nw;
        wp = nwp;
        t += h;
    }
    (w, wp)
}

fn taylor_step(t0: f64, w: f64, wp: f64, h: f64) -> (f64, f64) {
    // Coefficients of w(t0 + s) = Σ c_n s^n; c_{n+2} = (t0 c_n + c_{n−1}) / ((n+2)(n+1)).
    let mut cm1 = 0.0;
    let mut c0 = w;
    let mut c1 = wp;
    let mut val = c0 + c1 * h;
    let mut der = c1;
    let mut hp = h; // h^(n+1)
    let scale = w.abs() + wp.abs();
    let mut quiet = 0;
    for n in 0..120 {
        let nf = n as f64;
        let c2 = (t0 * c0 + cm1) / ((nf + 2.0) * (nf + 1.0));
        der += (nf + 2.0) * c2 * hp;
        hp *= h;
        let term = c2 * hp;
        val += term;
        // Some coefficients vanish identically (e.g. at t0 = 0), so wait for
        // three consecutive negligible terms.
        if term.abs() < 1e-18 * scale && (c2 * (nf + 2.0) * hp / h).abs() < 1e-18 * scale {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        cm1 = c0;
        c0 = c1;
        c1 = c2;
    }
    (val, der)
}

/// u_k and v_k coefficients of the Airy asymptotic expansions.
fn uv(count: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..count {
        let kf = k as f64;
        let uk = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

const NUV: usize = 40;

pub(crate) fn coeffs() -> &'static (Vec<f64>, Vec<f64>) {
    static UV: std::sync::OnceLock<(Vec<f64>, Vec<f64>)> = std::sync::OnceLock::new();
    UV.get_or_init(|| uv(NUV))
}

/// Σ s^k c_k / ζ^k truncated at the smallest term.
fn asym_sum(c: &[f64], zeta: f64, sign: f64) -> f64 {
    let mut sum = 0.0;
    let mut p = 1.0;
    let mut last = f64::INFINITY;
    for (k, &ck) in c.iter().enumerate() {
        let term = ck * p;
        if k > 0 && term.abs() > last {
            break;
        }
        sum += term;
        last = term.abs();
        if last < 1e-17 * sum.abs() {
            break;
        }
        p *= sign / zeta;
    }
    sum
}

fn ai_asym(t: f64) -> (f64, f64) {
    let (u, v) = coeffs();
    let zeta = 2.0 / 3.0 * t * t.sqrt();
    let q = t.sqrt().sqrt();
    let e = (-zeta).exp() / (2.0 * PI.sqrt());
    (e / q * asym_sum(u, zeta, -1.0), -e * q * asym_sum(v, zeta, -1.0))
}

fn bi_asym(t: f64) -> (f64, f64) {
    let (u, v) = coeffs();
    let zeta = 2.0 / 3.0 * t * t.sqrt();
    let q = t.sqrt().sqrt();
    let e = zeta.exp() / PI.sqrt();
    (e / q * asym_sum(u, zeta, 1.0), e * q * asym_sum(v, zeta, 1.0))
}

/// Split Σ (−1)^k c_{2k} ζ^{−2k} and Σ (−1)^k c_{2k+1} ζ^{−2k−1}.
fn asym_even_odd(c: &[f64], zeta: f64) -> (f64, f64) {
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut p = 1.0;
    let mut last = f64::INFINITY;
    for (k, &ck) in c.iter().enumerate() {
        let term = ck * p;
        if k > 0 && term.abs() > last {
            break;
        }
        let sgn = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            even += sgn * term;
        } else {
            odd += sgn * term;
        }
        last = term.abs();
        if last < 1e-18 {
            break;
        }
        p /= zeta;
    }
    (even, odd)
}

fn asym_neg(z: f64) -> Airy {
    let (u, v) = coeffs();
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let q = z.sqrt().sqrt();
    let (s, c) = (zeta - PI / 4.0).sin_cos();
    let (ue, uo) = asym_even_odd(u, zeta);
    let (ve, vo) = asym_even_odd(v, zeta);
    let a = 1.0 / (PI.sqrt() * q);
    let b = q / PI.sqrt();
    Airy {
        ai: a * (c * ue + s * uo),
        aip: b * (s * ve - c * vo),
        bi: a * (-s * ue + c * uo),
        bip: b * (c * ve + s * vo),
    }
}

/// The k-th zero of Ai (k ≥ 1), a_k < 0.
pub fn airy_zero(k: u32) -> Result<f64> {
    if k < 1 {
        return domain("airy_zero: k must be at least 1");
    }
    let guess = airy_zero_asymptotic(k);
    if k > 40 {
        // The five-term expansion is already below rounding here.
        return Ok(guess);
    }
    let mut x = guess;
    for _ in 0..20 {
        let a = airy_neg(x);
        let step = a.ai / a.aip;
        x -= step;
        if step.abs() < 1e-15 * x.abs() {
            break;
        }
    }
    Ok(x)
}

/// −T(3π(4k−1)/8), the large-k expansion of a_k.
pub(crate) fn airy_zero_asymptotic(k: u32) -> f64 {
    let t = 3.0 * PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = 1.0 / (t * t);
    let corr = 1.0
        + t2 * (5.0 / 48.0
            + t2 * (-5.0 / 36.0 + t2 * (77_125.0 / 82_944.0 + t2 * (-108_056_875.0 / 6_967_296.0))));
    -t.powf(2.0 / 3.0) * corr
}
