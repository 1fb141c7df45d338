//! Special functions: Bessel J of real order and the Airy functions.

mod airy;
mod bessel;
mod dd;
mod gamma;

pub use airy::{airy, airy_zero, Airy};
pub use bessel::{bessel_j, bessel_j_and_prime, bessel_j_prime, bessel_j_with, SeriesPolicy};

pub(crate) use airy::{airy_zero_asymptotic, coeffs as airy_uv};
pub(crate) use bessel::{debye_polys, j_and_jp_default};
pub(crate) use gamma::gamma;
