//! Simulation of non-Markovian open-quantum-system dynamics built on
//! exponential decompositions of the bath correlation function.
//!
//! The pipeline has three stages:
//!
//! 1. [`bath`] defines spectral-density models and evaluates the bath
//!    correlation function `C(τ)` and power spectrum `S(ω)` by adaptive
//!    quadrature. These are the ground-truth signals.
//! 2. [`expfit`] approximates `C(τ) ≈ Σ_k c_k exp(-ν_k τ)` with one of six
//!    algorithms (Matsubara, Prony, ESPRIT, AAA, ESPIRA, nonlinear least
//!    squares in time or frequency domain).
//! 3. [`rates`], [`dynamics`] and [`thermo`] turn the decomposition into
//!    closed-form decay/Lamb-shift coefficients, master-equation generators
//!    (Redfield, cumulant map, global/local GKLS, TCL₂/TCL₄, exact Volterra),
//!    propagated states and bath-resolved heat currents.
//!
//! Units: ħ = k_B = 1 throughout; all energies are multiples of a reference
//! frequency chosen by the caller, times are in its inverse.

pub mod bath;
pub mod dynamics;
pub mod expfit;
pub mod linalg;
pub mod quad;
pub mod rates;
pub mod thermo;
pub mod util;

pub use num_complex::Complex64 as C64;

/// Dense complex matrix used for operators and superoperators.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex vector (vectorized density matrices, amplitude vectors).
pub type CVector = nalgebra::DVector<C64>;
