//! Structured phonon spectral density of the FMO pigment-protein complex:
//! an Adolphs-Renger low-frequency continuum plus 62 Lorentzian-broadened
//! intra-pigment vibrational modes. All frequencies in cm⁻¹.

use super::BathError;

/// Number of tabulated vibrational modes.
pub const FMO_MODE_COUNT: usize = 62;

/// 1 ps⁻¹ expressed in cm⁻¹, the default mode broadening.
pub const MODE_WIDTH_INV_PS: f64 = 5.308_837_458_877;

/// meV → cm⁻¹.
const MEV_TO_INV_CM: f64 = 8.065_543_937;

const BUNDLED_TABLE: &str = include_str!("../../data/fmo_modes.dat");

/// Parameters of the Adolphs-Renger continuum
/// `J_AR(ω) = S/(s₁+s₂) Σᵢ sᵢ/(7!·2ωᵢ⁴) ω⁵ exp(-(ω/ωᵢ)^{1/2})`.
#[derive(Debug, Clone, Copy)]
pub struct ArParameters {
    pub s_total: f64,
    pub s1: f64,
    pub s2: f64,
    /// cm⁻¹
    pub omega_1: f64,
    /// cm⁻¹
    pub omega_2: f64,
}

impl Default for ArParameters {
    fn default() -> Self {
        Self {
            s_total: 0.29,
            s1: 0.8,
            s2: 0.5,
            omega_1: 0.069 * MEV_TO_INV_CM,
            omega_2: 0.24 * MEV_TO_INV_CM,
        }
    }
}

/// One broadened vibrational mode.
#[derive(Debug, Clone, Copy)]
pub struct VibrationalMode {
    /// Center frequency ω_k (cm⁻¹).
    pub omega_k: f64,
    /// Huang-Rhys factor s_k (dimensionless).
    pub s_k: f64,
    /// Lorentzian width γ_k (cm⁻¹).
    pub gamma_k: f64,
}

impl VibrationalMode {
    /// Broadened-comb contribution; converges to `ω_k² s_k δ(ω-ω_k)` as
    /// `γ_k → 0`.
    fn eval(&self, omega: f64) -> f64 {
        let (wk, g) = (self.omega_k, self.gamma_k);
        let num = 4.0 * wk * self.s_k * g * (wk * wk + g * g) * omega;
        let den = std::f64::consts::PI
            * ((omega + wk).powi(2) + g * g)
            * ((omega - wk).powi(2) + g * g);
        num / den
    }

    fn slope_at_zero(&self) -> f64 {
        let (wk, g) = (self.omega_k, self.gamma_k);
        4.0 * wk * self.s_k * g / (std::f64::consts::PI * (wk * wk + g * g))
    }
}

#[derive(Debug, Clone)]
pub struct FmoParameters {
    pub ar: ArParameters,
    pub modes: Vec<VibrationalMode>,
    /// Overall dimensionless coupling rescale applied to the total density.
    pub rescale_g: f64,
}

impl FmoParameters {
    /// The bundled 62-mode table with default broadening and rescale `g`.
    pub fn bundled(rescale_g: f64) -> Self {
        Self {
            ar: ArParameters::default(),
            modes: parse_mode_table(BUNDLED_TABLE).expect("bundled FMO table is valid"),
            rescale_g,
        }
    }

    /// Loads a mode table from text (two whitespace-separated columns with
    /// `#` comments) and validates it has exactly 62 rows.
    pub fn from_table_text(text: &str, rescale_g: f64) -> Result<Self, BathError> {
        let modes = parse_mode_table(text)?;
        Ok(Self { ar: ArParameters::default(), modes, rescale_g })
    }

    pub fn validate(&self) -> Result<(), BathError> {
        if self.modes.len() != FMO_MODE_COUNT {
            return Err(BathError::InvalidModel(format!(
                "FMO mode table must have {FMO_MODE_COUNT} rows, got {}",
                self.modes.len()
            )));
        }
        if self.rescale_g <= 0.0 {
            return Err(BathError::InvalidModel("FMO rescale factor must be positive".into()));
        }
        if self.modes.iter().any(|m| m.omega_k <= 0.0 || m.s_k < 0.0 || m.gamma_k <= 0.0) {
            return Err(BathError::InvalidModel("FMO mode parameters out of range".into()));
        }
        Ok(())
    }

    pub fn eval(&self, omega: f64) -> f64 {
        if omega <= 0.0 {
            return 0.0;
        }
        self.rescale_g * (self.eval_ar(omega) + self.eval_modes(omega))
    }

    /// Adolphs-Renger continuum alone (before rescale).
    pub fn eval_ar(&self, omega: f64) -> f64 {
        let p = &self.ar;
        const FACT7: f64 = 5040.0;
        let pref = p.s_total / (p.s1 + p.s2);
        let w5 = omega.powi(5);
        let term = |si: f64, wi: f64| si / (FACT7 * 2.0 * wi.powi(4)) * w5 * (-(omega / wi).sqrt()).exp();
        pref * (term(p.s1, p.omega_1) + term(p.s2, p.omega_2))
    }

    /// Broadened vibrational comb alone (before rescale).
    pub fn eval_modes(&self, omega: f64) -> f64 {
        self.modes.iter().map(|m| m.eval(omega)).sum()
    }

    pub fn slope_at_zero(&self) -> f64 {
        // AR part is O(ω⁵)
        self.rescale_g * self.modes.iter().map(|m| m.slope_at_zero()).sum::<f64>()
    }

    pub fn frequency_scale(&self) -> f64 {
        self.modes.iter().map(|m| m.omega_k).fold(100.0, f64::max)
    }

    pub fn min_mode_width(&self) -> f64 {
        self.modes.iter().map(|m| m.gamma_k).fold(f64::INFINITY, f64::min)
    }

    /// Sum of the tabulated Huang-Rhys factors (data-integrity checksum).
    pub fn huang_rhys_sum(&self) -> f64 {
        self.modes.iter().map(|m| m.s_k).sum()
    }
}

fn parse_mode_table(text: &str) -> Result<Vec<VibrationalMode>, BathError> {
    let mut modes = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split_whitespace();
        let omega_k: f64 = cols
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| BathError::InvalidModel(format!("FMO table line {}: bad ω", lineno + 1)))?;
        let s_k: f64 = cols
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| BathError::InvalidModel(format!("FMO table line {}: bad s", lineno + 1)))?;
        if cols.next().is_some() {
            return Err(BathError::InvalidModel(format!(
                "FMO table line {}: expected exactly two columns",
                lineno + 1
            )));
        }
        modes.push(VibrationalMode { omega_k, s_k, gamma_k: MODE_WIDTH_INV_PS });
    }
    if modes.len() != FMO_MODE_COUNT {
        return Err(BathError::InvalidModel(format!(
            "FMO mode table must have {FMO_MODE_COUNT} rows, got {}",
            modes.len()
        )));
    }
    Ok(modes)
}
