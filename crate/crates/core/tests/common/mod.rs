#![allow(dead_code)]

use std::f64::consts::PI;

/// Whitespace-separated numeric rows of a file under tests/data, comments skipped.
pub fn rows(name: &str) -> Vec<Vec<f64>> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|s| s.parse().unwrap()).collect())
        .collect()
}

/// √(2/(π·max(x, 1))).
pub fn envelope(x: f64) -> f64 {
    (2.0 / (PI * x.max(1.0))).sqrt()
}

/// Accuracy contract for J: relative 1e-12, or absolute 1e-14·max(1, envelope).
pub fn j_tolerance(want: f64, x: f64) -> f64 {
    (1e-12 * want.abs()).max(1e-14 * envelope(x).max(1.0))
}
