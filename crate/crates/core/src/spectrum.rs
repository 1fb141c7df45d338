//! Dirichlet eigenvalues of the unit disk and of circular sectors.
//!
//! On the disk the eigenfunctions are J_n(j_k(n) r)·{cos, sin}(nθ); on the
//! sector of angle α they are J_ν(j_k(ν) r)·sin(nπθ/α) with ν = nπ/α. The
//! first m eigenvalues are drawn from the pairs (n, k) whose nodal count is
//! at most m, which Courant's theorem makes sufficient.

use std::f64::consts::PI;

use crate::error::{domain as domain_error, Result};
use crate::par::{map_collect, Execution};
use crate::specfun::bessel_j;
use crate::zeros::{bessel_zero, ZeroQuery, DEFAULT_ABS_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainSpec {
    Disk,
    Sector { alpha: f64 },
}

impl DomainSpec {
    pub fn sector(alpha: f64) -> Result<Self> {
        let d = DomainSpec::Sector { alpha };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            DomainSpec::Disk => Ok(()),
            DomainSpec::Sector { alpha } if alpha > 0.0 && alpha < 2.0 * PI => Ok(()),
            DomainSpec::Sector { alpha } => domain_error(format!("sector angle must lie in (0, 2pi), got {alpha}")),
        }
    }

    /// Bessel order of angular mode n.
    pub fn order(&self, n: u32) -> f64 {
        match *self {
            DomainSpec::Disk => n as f64,
            DomainSpec::Sector { alpha } => n as f64 * PI / alpha,
        }
    }

    /// Nodal domains of the (n, k) eigenfunction.
    pub fn nodal_count(&self, n: u32, k: u32) -> u64 {
        let (n, k) = (n as u64, k as u64);
        match self {
            DomainSpec::Disk if n == 0 => k,
            DomainSpec::Disk => 2 * n * k,
            DomainSpec::Sector { .. } => n * k,
        }
    }

    fn first_mode(&self) -> u32 {
        match self {
            DomainSpec::Disk => 0,
            DomainSpec::Sector { .. } => 1,
        }
    }

    /// Two-term Weyl estimate of the number of eigenvalues up to λ.
    pub fn weyl_estimate(&self, lambda: f64) -> f64 {
        let (area, perimeter) = match *self {
            DomainSpec::Disk => (PI, 2.0 * PI),
            DomainSpec::Sector { alpha } => (0.5 * alpha, 2.0 + alpha),
        };
        (area * lambda - perimeter * lambda.sqrt()) / (4.0 * PI)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvalueRecord {
    pub rank: usize,
    pub lambda: f64,
    /// Angular mode; the Bessel order is [`DomainSpec::order`] of it.
    pub n: u32,
    pub k: u32,
    pub multiplicity: u8,
    pub nodal_domains: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumerationOptions {
    pub execution: Execution,
    /// Restrict candidates to nodal count ≤ 0.7·m. Faster, but rests on an
    /// empirical constant rather than on Courant's theorem.
    pub pleijel: bool,
    pub abs_tol: f64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { execution: Execution::available(), pleijel: false, abs_tol: DEFAULT_ABS_TOL }
    }
}

pub const PLEIJEL_FACTOR: f64 = 0.7;

/// First m eigenvalues, one record per rank, sorted by (λ, n, k).
pub fn first_eigenvalues(domain: DomainSpec, m: usize) -> Result<Vec<EigenvalueRecord>> {
    first_eigenvalues_with(domain, m, &EnumerationOptions::default())
}

pub fn first_eigenvalues_with(domain: DomainSpec, m: usize, opts: &EnumerationOptions) -> Result<Vec<EigenvalueRecord>> {
    domain.validate()?;
    if m == 0 {
        return domain_error("m must be at least 1");
    }
    let budget = if opts.pleijel { ((m as f64) * PLEIJEL_FACTOR).floor().max(1.0) as u64 } else { m as u64 };
    // Start from the Weyl estimate with room for the remainder and grow the
    // cutoff until enough eigenvalues fall below it.
    let mut lambda_cut = weyl_inverse(&domain, m as f64 + 3.0 * (m as f64).cbrt() + 5.0);
    loop {
        let found = candidates_below(&domain, lambda_cut, budget, opts)?;
        let total: usize = found.iter().map(|c| c.copies as usize).sum();
        if total >= m {
            return Ok(assign_ranks(&domain, found, m));
        }
        lambda_cut *= 1.25;
    }
}

/// Smallest λ whose Weyl estimate reaches `target`.
fn weyl_inverse(domain: &DomainSpec, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, 16.0);
    while domain.weyl_estimate(hi) < target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if domain.weyl_estimate(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.max(30.0)
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    lambda: f64,
    n: u32,
    k: u32,
    copies: u8,
}

/// Every candidate (n, k) within the nodal budget with j_k² ≤ λ_cut.
fn candidates_below(domain: &DomainSpec, lambda_cut: f64, budget: u64, opts: &EnumerationOptions) -> Result<Vec<Candidate>> {
    let s = lambda_cut.sqrt();
    // j_1(ν) > ν, so modes with order above √λ_cut contribute nothing.
    let mut modes = Vec::new();
    let mut n = domain.first_mode();
    while domain.order(n) < s && domain.nodal_count(n, 1) <= budget {
        modes.push(n);
        n += 1;
    }
    let per_mode = map_collect(opts.execution, &modes, |&n| -> Result<Vec<Candidate>> {
        let nu = domain.order(n);
        let copies = if matches!(domain, DomainSpec::Disk) && n > 0 { 2 } else { 1 };
        let mut out = Vec::new();
        let mut k = 1u32;
        while domain.nodal_count(n, k) <= budget {
            let j = bessel_zero(&ZeroQuery::with_tol(nu, k, opts.abs_tol)?)?;
            if j > s {
                break;
            }
            out.push(Candidate { lambda: j * j, n, k, copies });
            k += 1;
        }
        Ok(out)
    });
    let mut all = Vec::new();
    for part in per_mode {
        all.extend(part?);
    }
    all.sort_by(|a, b| a.lambda.total_cmp(&b.lambda).then(a.n.cmp(&b.n)).then(a.k.cmp(&b.k)));
    Ok(all)
}

fn assign_ranks(domain: &DomainSpec, found: Vec<Candidate>, m: usize) -> Vec<EigenvalueRecord> {
    let mut out = Vec::with_capacity(m);
    for c in &found {
        for _ in 0..c.copies {
            if out.len() == m {
                break;
            }
            out.push(EigenvalueRecord {
                rank: out.len() + 1,
                lambda: c.lambda,
                n: c.n,
                k: c.k,
                multiplicity: c.copies,
                nodal_domains: domain.nodal_count(c.n, c.k),
            });
        }
    }
    if let DomainSpec::Sector { .. } = domain {
        // Accidental degeneracy: distinct modes sharing a zero to within
        // the zero tolerance.
        let close = |a: f64, b: f64| (a.sqrt() - b.sqrt()).abs() <= 2.0 * DEFAULT_ABS_TOL;
        for i in 0..out.len() {
            let prev = i > 0 && close(out[i - 1].lambda, out[i].lambda);
            let next = i + 1 < out.len() && close(out[i + 1].lambda, out[i].lambda);
            if prev || next {
                out[i].multiplicity = 2;
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularPhase {
    Sin,
    Cos,
}

/// u(r, θ) for the eigenfunction behind `rec`.
pub fn eigenfunction_value(domain: DomainSpec, rec: &EigenvalueRecord, r: f64, theta: f64, phase: AngularPhase) -> Result<f64> {
    domain.validate()?;
    if !(0.0..=1.0).contains(&r) {
        return domain_error(format!("radius must lie in [0, 1], got {r}"));
    }
    if !theta.is_finite() {
        return domain_error("angle must be finite");
    }
    let radial = bessel_j(domain.order(rec.n), rec.lambda.sqrt() * r)?;
    match domain {
        DomainSpec::Disk => {
            if rec.n == 0 {
                return Ok(radial);
            }
            let a = rec.n as f64 * theta;
            Ok(radial * if phase == AngularPhase::Sin { a.sin() } else { a.cos() })
        }
        DomainSpec::Sector { alpha } => {
            if phase == AngularPhase::Cos {
                return domain_error("the cosine phase violates the boundary condition on a sector");
            }
            if !(0.0..=alpha).contains(&theta) {
                return domain_error(format!("angle must lie in [0, {alpha}], got {theta}"));
            }
            Ok(radial * (rec.n as f64 * PI * theta / alpha).sin())
        }
    }
}

/// Nodal circles and rays of one eigenfunction.
#[derive(Debug, Clone, PartialEq)]
pub struct NodalStructure {
    /// j_i/j_k for i = 1..k; the last one is the boundary.
    pub radii: Vec<f64>,
    /// Directions of the nodal rays (sector: including both straight
    /// edges; disk: 2n rays forming n diameters).
    pub angles: Vec<f64>,
    pub count: u64,
}

pub fn nodal_structure(domain: DomainSpec, rec: &EigenvalueRecord, phase: AngularPhase) -> Result<NodalStructure> {
    domain.validate()?;
    let nu = domain.order(rec.n);
    let zeros = (1..=rec.k).map(|i| bessel_zero(&ZeroQuery::new(nu, i)?)).collect::<Result<Vec<f64>>>()?;
    let last = *zeros.last().expect("k >= 1");
    let radii = zeros.iter().map(|j| j / last).collect();
    let angles = match domain {
        DomainSpec::Disk if rec.n == 0 => Vec::new(),
        DomainSpec::Disk => {
            let n = rec.n as f64;
            let offset = if phase == AngularPhase::Cos { PI / (2.0 * n) } else { 0.0 };
            (0..2 * rec.n).map(|d| d as f64 * PI / n + offset).collect()
        }
        DomainSpec::Sector { alpha } => (0..=rec.n).map(|d| d as f64 * alpha / rec.n as f64).collect(),
    };
    Ok(NodalStructure { radii, angles, count: domain.nodal_count(rec.n, rec.k) })
}
