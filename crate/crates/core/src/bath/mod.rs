//! Spectral-density models and the ground-truth bath signals.
//!
//! A bosonic Gaussian environment is fully characterized by its spectral
//! density `J(ω)` and inverse temperature `β`. This module evaluates the
//! two-time correlation function
//!
//! ```text
//! C(τ) = (1/π) ∫₀^∞ dω J(ω) [coth(βω/2) cos(ωτ) - i sin(ωτ)]
//! ```
//!
//! by adaptive Gauss-Kronrod quadrature, and the power spectrum
//! `S(ω) = sign(ω) J(|ω|) [coth(βω/2) + 1]` in closed form. Every other
//! module validates its fast paths against these.

mod fmo;

pub use fmo::{FmoParameters, ArParameters, VibrationalMode, FMO_MODE_COUNT};

use crate::quad::{self, QuadOptions, QuadratureNotConverged};
use crate::util::{bose_occupation, coth};
use crate::C64;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum BathError {
    #[error("spectral density evaluated at negative frequency {0}")]
    NegativeFrequency(f64),
    #[error("frequency {0} outside tabulated range [{1}, {2}]")]
    OutOfTabulatedRange(f64, f64, f64),
    #[error("power spectrum has no finite ω → 0 limit for this model")]
    UndefinedAtZero,
    #[error("invalid spectral density: {0}")]
    InvalidModel(String),
    #[error(transparent)]
    Quadrature(#[from] QuadratureNotConverged),
}

/// Spectral density of the system-bath coupling.
#[derive(Debug, Clone)]
pub enum SpectralDensityModel {
    /// `J(ω) = α ω^s ω_c^{1-s} exp(-ω/ω_c)`: sub-/super-Ohmic family with an
    /// exponential cutoff.
    OhmicFamily { alpha: f64, s: f64, omega_c: f64 },
    /// Underdamped Brownian-motion resonance
    /// `J(ω) = α² Γ ω / [(ω₀² - ω²)² + Γ² ω²]`.
    UnderdampedBrownian { alpha: f64, gamma_width: f64, omega_0: f64 },
    /// Experimentally derived FMO phonon density: Adolphs-Renger continuum
    /// plus 62 Lorentzian-broadened vibrational modes, globally rescaled.
    StructuredFmo(FmoParameters),
    /// Sampled density with monotone-cubic interpolation between samples.
    Tabulated { samples: Vec<(f64, f64)> },
}

impl SpectralDensityModel {
    /// Validates structural invariants (monotone grid, non-negative values,
    /// correct FMO table size).
    pub fn validate(&self) -> Result<(), BathError> {
        match self {
            SpectralDensityModel::OhmicFamily { alpha, s, omega_c } => {
                if *alpha < 0.0 || *s <= 0.0 || *omega_c <= 0.0 {
                    return Err(BathError::InvalidModel(format!(
                        "ohmic parameters out of range: alpha={alpha}, s={s}, omega_c={omega_c}"
                    )));
                }
            }
            SpectralDensityModel::UnderdampedBrownian { alpha, gamma_width, omega_0 } => {
                if *alpha < 0.0 || *gamma_width <= 0.0 || *omega_0 <= 0.0 {
                    return Err(BathError::InvalidModel(format!(
                        "underdamped parameters out of range: alpha={alpha}, gamma={gamma_width}, omega_0={omega_0}"
                    )));
                }
            }
            SpectralDensityModel::StructuredFmo(p) => p.validate()?,
            SpectralDensityModel::Tabulated { samples } => {
                if samples.len() < 2 {
                    return Err(BathError::InvalidModel("tabulated J needs at least 2 samples".into()));
                }
                if samples[0].0 < 0.0 {
                    return Err(BathError::NegativeFrequency(samples[0].0));
                }
                if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
                    return Err(BathError::InvalidModel("tabulated ω grid must be strictly increasing".into()));
                }
                if samples.iter().any(|&(_, j)| j < 0.0) {
                    return Err(BathError::InvalidModel("tabulated J must be non-negative".into()));
                }
            }
        }
        Ok(())
    }

    /// `J(ω)` for `ω ≥ 0`. Tabulated models reject frequencies outside the
    /// sample range.
    pub fn eval(&self, omega: f64) -> Result<f64, BathError> {
        if omega < 0.0 {
            return Err(BathError::NegativeFrequency(omega));
        }
        match self {
            SpectralDensityModel::OhmicFamily { alpha, s, omega_c } => {
                if omega == 0.0 {
                    return Ok(0.0);
                }
                Ok(alpha * omega.powf(*s) * omega_c.powf(1.0 - s) * (-omega / omega_c).exp())
            }
            SpectralDensityModel::UnderdampedBrownian { alpha, gamma_width, omega_0 } => {
                let d = (omega_0 * omega_0 - omega * omega).powi(2)
                    + gamma_width * gamma_width * omega * omega;
                Ok(alpha * alpha * gamma_width * omega / d)
            }
            SpectralDensityModel::StructuredFmo(p) => Ok(p.eval(omega)),
            SpectralDensityModel::Tabulated { samples } => {
                let lo = samples[0].0;
                let hi = samples[samples.len() - 1].0;
                if omega < lo || omega > hi {
                    return Err(BathError::OutOfTabulatedRange(omega, lo, hi));
                }
                Ok(monotone_cubic(samples, omega))
            }
        }
    }

    /// `J(ω)` extended by zero outside a tabulated range; used by quadrature.
    fn eval_extended(&self, omega: f64) -> f64 {
        if omega <= 0.0 {
            return 0.0;
        }
        match self {
            SpectralDensityModel::Tabulated { samples } => {
                let hi = samples[samples.len() - 1].0;
                if omega < samples[0].0 || omega > hi {
                    0.0
                } else {
                    monotone_cubic(samples, omega)
                }
            }
            _ => self.eval(omega).unwrap_or(0.0),
        }
    }

    /// Analytic slope `J'(0)`; `None` when the limit does not exist.
    pub fn slope_at_zero(&self) -> Option<f64> {
        match self {
            SpectralDensityModel::OhmicFamily { alpha, s, omega_c } => {
                if *s > 1.0 {
                    Some(0.0)
                } else if (*s - 1.0).abs() < 1e-12 {
                    Some(*alpha)
                } else {
                    None // sub-Ohmic: J/ω diverges
                }
            }
            SpectralDensityModel::UnderdampedBrownian { alpha, gamma_width, omega_0 } => {
                Some(alpha * alpha * gamma_width / omega_0.powi(4))
            }
            SpectralDensityModel::StructuredFmo(p) => Some(p.slope_at_zero()),
            SpectralDensityModel::Tabulated { samples } => {
                if samples[0].0 == 0.0 {
                    Some((samples[1].1 - samples[0].1) / (samples[1].0 - samples[0].0))
                } else {
                    None
                }
            }
        }
    }

    /// Characteristic frequency scale used for grids and cutoffs.
    pub fn frequency_scale(&self) -> f64 {
        match self {
            SpectralDensityModel::OhmicFamily { omega_c, .. } => *omega_c,
            SpectralDensityModel::UnderdampedBrownian { omega_0, .. } => *omega_0,
            SpectralDensityModel::StructuredFmo(p) => p.frequency_scale(),
            SpectralDensityModel::Tabulated { samples } => samples[samples.len() - 1].0,
        }
    }

    /// Suggested quadrature panel width for models with narrow features.
    fn panel_width_hint(&self) -> Option<f64> {
        match self {
            SpectralDensityModel::StructuredFmo(p) => Some(4.0 * p.min_mode_width()),
            SpectralDensityModel::Tabulated { samples } => {
                let min_gap = samples
                    .windows(2)
                    .map(|w| w[1].0 - w[0].0)
                    .fold(f64::INFINITY, f64::min);
                Some(8.0 * min_gap)
            }
            _ => None,
        }
    }
}

/// Free-function form of [`SpectralDensityModel::eval`].
pub fn eval_spectral_density(model: &SpectralDensityModel, omega: f64) -> Result<f64, BathError> {
    model.eval(omega)
}

/// Spectral density plus inverse temperature: the full bath description.
#[derive(Debug, Clone)]
pub struct BathSpec {
    pub model: SpectralDensityModel,
    /// Inverse temperature; `f64::INFINITY` selects T = 0.
    pub beta: f64,
}

impl BathSpec {
    pub fn new(model: SpectralDensityModel, beta: f64) -> Result<Self, BathError> {
        if !(beta > 0.0) {
            return Err(BathError::InvalidModel(format!("beta must be positive, got {beta}")));
        }
        model.validate()?;
        Ok(Self { model, beta })
    }

    /// Thermal weight `coth(βω/2)`, handling T = 0.
    fn thermal_coth(&self, omega: f64) -> f64 {
        if self.beta.is_infinite() {
            if omega >= 0.0 { 1.0 } else { -1.0 }
        } else {
            coth(0.5 * self.beta * omega)
        }
    }

    /// Upper integration cutoff such that the neglected tail of the
    /// correlation integrand stays below `threshold` (integration-by-parts
    /// bound `envelope·W/(1 + W|τ|)` for oscillatory tails).
    fn correlation_cutoff(&self, tau: f64, threshold: f64) -> f64 {
        let scale = self.model.frequency_scale();
        let envelope = |w: f64| {
            self.model.eval_extended(w) * self.thermal_coth(w.max(1e-300)).abs() / std::f64::consts::PI
        };
        let mut w = 8.0 * scale;
        let cap = 1e9 * scale;
        while w < cap {
            let bound = envelope(w) * w / (1.0 + w * tau.abs());
            if bound < threshold {
                return w;
            }
            w *= 2.0;
        }
        cap
    }

    /// Bath correlation function by adaptive quadrature at default tolerance
    /// (absolute 1e-14·scale², relative 1e-10). Negative times are obtained
    /// from `C(-τ) = conj C(τ)`.
    pub fn correlation(&self, tau: f64) -> Result<C64, BathError> {
        self.correlation_with_tol(tau, 1e-10)
    }

    /// Same as [`BathSpec::correlation`] with an explicit relative tolerance.
    pub fn correlation_with_tol(&self, tau: f64, rel_tol: f64) -> Result<C64, BathError> {
        if tau < 0.0 {
            return Ok(self.correlation_with_tol(-tau, rel_tol)?.conj());
        }
        // magnitude estimate from the envelope maximum for the absolute floor
        let scale = self.model.frequency_scale();
        let mut env_max: f64 = 0.0;
        for i in 0..200 {
            let w = scale * 10f64.powf(-3.0 + 6.0 * i as f64 / 199.0);
            env_max = env_max.max(self.model.eval_extended(w) * self.thermal_coth(w).abs());
        }
        let magnitude = env_max * scale / std::f64::consts::PI;
        let abs_tol = (1e-14 * magnitude).max(1e-300);

        let cutoff = self.correlation_cutoff(tau, 0.1 * abs_tol.max(rel_tol * magnitude * 1e-3));
        let mut opts = QuadOptions::with_tol(abs_tol, rel_tol);
        opts.max_intervals = 200_000;
        let mut width = if tau > 0.0 { std::f64::consts::PI / tau } else { f64::INFINITY };
        if let Some(hint) = self.model.panel_width_hint() {
            width = width.min(hint);
        }
        if width.is_finite() {
            opts = opts.max_width(width);
        }

        let beta = self.beta;
        let model = &self.model;
        let f = |w: f64| -> C64 {
            if w <= 0.0 {
                return C64::new(0.0, 0.0);
            }
            let j = model.eval_extended(w);
            let th = if beta.is_infinite() { 1.0 } else { coth(0.5 * beta * w) };
            let (s, c) = (w * tau).sin_cos();
            C64::new(j * th * c, -j * s) / std::f64::consts::PI
        };
        let r = quad::integrate(f, 0.0, cutoff, &opts)?;
        Ok(r.value)
    }

    /// Power spectrum `S(ω) = sign(ω) J(|ω|) [coth(βω/2) + 1]`, evaluated so
    /// that detailed balance `S(ω) = e^{βω} S(-ω)` holds to rounding.
    pub fn power_spectrum(&self, omega: f64) -> Result<f64, BathError> {
        if omega == 0.0 {
            if self.beta.is_infinite() {
                return Ok(0.0);
            }
            return match self.model.slope_at_zero() {
                Some(sl) => Ok(2.0 * sl / self.beta),
                None => Err(BathError::UndefinedAtZero),
            };
        }
        let j = self.model.eval(omega.abs())?;
        if self.beta.is_infinite() {
            return Ok(if omega > 0.0 { 2.0 * j } else { 0.0 });
        }
        let n = bose_occupation(self.beta, omega.abs());
        Ok(if omega > 0.0 { 2.0 * j * (n + 1.0) } else { 2.0 * j * n })
    }
}

/// Monotone (Fritsch-Carlson) piecewise-cubic interpolation.
fn monotone_cubic(samples: &[(f64, f64)], x: f64) -> f64 {
    let n = samples.len();
    let idx = match samples.binary_search_by(|&(sx, _)| sx.partial_cmp(&x).unwrap()) {
        Ok(i) => return samples[i].1,
        Err(i) => i.clamp(1, n - 1) - 1,
    };
    let (x0, y0) = samples[idx];
    let (x1, y1) = samples[idx + 1];
    let h = x1 - x0;
    let secant = |k: usize| (samples[k + 1].1 - samples[k].1) / (samples[k + 1].0 - samples[k].0);
    let d = secant(idx);
    let m0 = if idx == 0 { d } else { slope_limited(secant(idx - 1), d) };
    let m1 = if idx + 2 == n { d } else { slope_limited(d, secant(idx + 1)) };
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
        + m0 * h * (t3 - 2.0 * t2 + t)
        + y1 * (-2.0 * t3 + 3.0 * t2)
        + m1 * h * (t3 - t2)
}

fn slope_limited(left: f64, right: f64) -> f64 {
    if left * right <= 0.0 {
        0.0
    } else {
        // harmonic mean keeps the interpolant monotone on the segment
        2.0 / (1.0 / left + 1.0 / right)
    }
}

#[cfg(test)]
mod tests;
