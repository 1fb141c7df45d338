use std::f64::consts::PI;

use diskspec::nodal::*;
use diskspec::spectrum::{eigenfunction_value, AngularPhase, DomainSpec, EigenvalueRecord};
use diskspec::zeros::{bessel_zero, ZeroQuery};

const TOL: f64 = DEFAULT_DEGENERACY_TOL;

fn zero(nu: f64, k: u32) -> f64 {
    bessel_zero(&ZeroQuery::with_tol(nu, k, 1e-13).unwrap()).unwrap()
}

fn within(got: f64, want: f64, rel: f64) -> bool {
    ((got - want) / want).abs() <= rel
}

#[test]
fn critical_angle_values() {
    let (nu0, alpha0) = critical_angle().unwrap();
    assert!((nu0 - 2.823823).abs() <= 1e-5, "{nu0}");
    assert!((alpha0 - 1.112531).abs() <= 1e-5, "{alpha0}");
    assert!((zero(nu0, 2) - zero(2.0 * nu0, 1)).abs() <= 1e-8);
    assert!(zero_gap(nu0 - 1e-6).unwrap() * zero_gap(nu0 + 1e-6).unwrap() < 0.0);
}

#[test]
fn second_eigenvalue_around_critical_angle() {
    let c = classify_first_nodal_line(1.11, TOL).unwrap();
    assert_eq!(c.kind, NodalLineKind::RadialCircle);
    assert!(within(c.lambda2, 91.0072, 5e-3), "{}", c.lambda2);
    let c = classify_first_nodal_line(1.112531602739001, TOL).unwrap();
    assert_eq!(c.kind, NodalLineKind::UndefinedCritical);
    assert_eq!((c.parameter, c.multiplicity2), (None, 2));
    assert!(within(c.lambda2, 90.8371, 5e-3), "{}", c.lambda2);
    let c = classify_first_nodal_line(1.2, TOL).unwrap();
    assert_eq!(c.kind, NodalLineKind::AngularRay);
    assert_eq!(c.parameter, Some(0.6));
    assert!(within(c.lambda2, 81.9144, 5e-3), "{}", c.lambda2);
    let (_, alpha0) = critical_angle().unwrap();
    assert_eq!(classify_first_nodal_line(alpha0, TOL).unwrap().kind, NodalLineKind::UndefinedCritical);
}

#[test]
fn classification_follows_the_zero_gap() {
    let (_, alpha0) = critical_angle().unwrap();
    for i in 0..100 {
        let alpha = 0.2 + (2.0 * PI - 0.4) * (i as f64 + 0.5) / 100.0;
        if (alpha - alpha0).abs() < 1e-6 {
            continue;
        }
        let nu = PI / alpha;
        let gap = zero(nu, 2) - zero(2.0 * nu, 1);
        let c = classify_first_nodal_line(alpha, TOL).unwrap();
        let want = if gap < 0.0 { NodalLineKind::RadialCircle } else { NodalLineKind::AngularRay };
        assert_eq!(c.kind, want, "alpha = {alpha}");
        assert_eq!(c.multiplicity2, 1);
    }
    assert_eq!(classify_first_nodal_line(0.3, TOL).unwrap().kind, NodalLineKind::RadialCircle);
    assert_eq!(classify_first_nodal_line(5.0, TOL).unwrap().kind, NodalLineKind::AngularRay);
}

#[test]
fn second_eigenvalue_is_continuous_at_critical_angle() {
    let (_, alpha0) = critical_angle().unwrap();
    let left = classify_first_nodal_line(alpha0 - 1e-7, TOL).unwrap();
    let right = classify_first_nodal_line(alpha0 + 1e-7, TOL).unwrap();
    assert_eq!((left.kind, right.kind), (NodalLineKind::RadialCircle, NodalLineKind::AngularRay));
    assert!(within(left.lambda2, right.lambda2, 1e-4));
}

#[test]
fn nodal_circle_is_a_zero_set() {
    for alpha in [0.3, 0.8, 1.11] {
        let c = classify_first_nodal_line(alpha, TOL).unwrap();
        let r = c.parameter.unwrap();
        let nu = PI / alpha;
        assert!(r > 0.0 && r < 1.0);
        assert!((r - zero(nu, 1) / zero(nu, 2)).abs() < 1e-12);
        let sector = DomainSpec::Sector { alpha };
        let rec = EigenvalueRecord { rank: 2, lambda: c.lambda2, n: 1, k: 2, multiplicity: 1, nodal_domains: 2 };
        for i in 0..20 {
            let theta = alpha * (i as f64 + 0.5) / 20.0;
            assert!(eigenfunction_value(sector, &rec, r, theta, AngularPhase::Sin).unwrap().abs() <= 1e-8);
        }
    }
}

#[test]
fn rejects_bad_input() {
    assert!(classify_first_nodal_line(0.0, TOL).is_err());
    assert!(classify_first_nodal_line(7.0, TOL).is_err());
    assert!(classify_first_nodal_line(1.0, -1.0).is_err());
}
