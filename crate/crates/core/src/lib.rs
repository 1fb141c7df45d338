//! Dirichlet eigenvalues of the unit disk and of circular sectors, computed
//! from zeros of Bessel functions.
//!
//! * [`specfun`]: Bessel J of real order, Airy functions and Airy zeros.
//! * [`zeros`]: bracketed zeros j_k(ν) of J_ν.
//! * [`olver`]: the uniform Airy-type expansion of J_n and its error terms.
//! * [`spectrum`]: the first m eigenvalues with nodal labels.
//! * [`nodal`]: first nodal line of the second sector eigenfunction.
//! * [`counting`]: the exact counting function N(λ) on the disk.

pub mod counting;
pub mod error;
pub mod olver;
pub mod nodal;
pub mod par;
pub mod spectrum;
pub mod specfun;
pub mod zeros;

pub use error::{Error, Result};
