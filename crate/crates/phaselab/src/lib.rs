//! A numerical laboratory for degree-0 homogeneous unimodular Fourier
//! multipliers `T^t f = (e^{itΦ} f̂)^∨`.
//!
//! The crate has four layers, from geometry to experiment:
//!
//! * [`symbol`] — the catalog and calculus of 0-homogeneous symbols `Φ`:
//!   evaluation on rays, chart phases on the hyperplane `ξ_d = 1`, rotation
//!   normalization, Morse analysis of `Φ` restricted to the unit sphere, and
//!   the spherical mean of `e^{itΦ}`.
//! * [`phase`] — the critical-point machinery for the modified phase
//!   `Φ_x(ξ) = φ(ξ₋) + ξ_d(⟨ξ₋, x₋⟩ + x_d)`: the stationarity system, its
//!   bordered Jacobian and Schur determinant, a damped Newton solver, the
//!   closed form in two dimensions, and certified witness domains.
//! * [`oscillatory`] — oscillation-resolved Gauss–Legendre cubature for
//!   `∫ e^{itΦ(ξ)} ψ(ξ) dξ`, the stationary-phase leading term with its exact
//!   constant, and decay-order verification.
//! * [`multiplier`] — application of `T^t` to witness bumps, pointwise via the
//!   transformed representation and on grids via the FFT, together with the
//!   lower-bound norm surrogate and growth-exponent fitting.
//!
//! Everything is deterministic: sampling uses Halton sequences with explicit
//! seeds and all parallel reductions run in a fixed order, so repeated runs
//! produce bit-identical results.

pub mod error;
pub(crate) mod linalg;
pub mod multiplier;
pub mod oscillatory;
pub mod phase;
pub mod symbol;

pub use error::{Error, Result};
