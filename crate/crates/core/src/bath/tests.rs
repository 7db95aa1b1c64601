use super::*;
use crate::util::linspace;

fn underdamped(beta: f64) -> BathSpec {
    BathSpec::new(
        SpectralDensityModel::UnderdampedBrownian { alpha: 1.0, gamma_width: 2.0, omega_0: 1.2 },
        beta,
    )
    .unwrap()
}

#[test]
fn underdamped_at_resonance() {
    // J(ω₀) = α²Γω₀ / (0 + Γ²ω₀²) = 1·2·1.2 / (4·1.44)
    let m = SpectralDensityModel::UnderdampedBrownian { alpha: 1.0, gamma_width: 2.0, omega_0: 1.2 };
    let j = m.eval(1.2).unwrap();
    assert!((j - 2.4 / 5.76).abs() < 1e-15);
}

#[test]
fn all_models_vanish_at_zero() {
    let models = [
        SpectralDensityModel::OhmicFamily { alpha: 0.05 * std::f64::consts::PI, s: 1.5, omega_c: 1.0 },
        SpectralDensityModel::UnderdampedBrownian { alpha: 1.0, gamma_width: 2.0, omega_0: 1.2 },
        SpectralDensityModel::StructuredFmo(FmoParameters::bundled(1.0 / 15.0)),
        SpectralDensityModel::Tabulated { samples: vec![(0.0, 0.0), (1.0, 0.5), (2.0, 0.0)] },
    ];
    for m in &models {
        assert_eq!(m.eval(0.0).unwrap(), 0.0);
    }
}

#[test]
fn negative_frequency_rejected() {
    let m = SpectralDensityModel::OhmicFamily { alpha: 1.0, s: 1.0, omega_c: 1.0 };
    assert!(matches!(m.eval(-0.5), Err(BathError::NegativeFrequency(_))));
}

#[test]
fn tabulated_out_of_range_rejected() {
    let m = SpectralDensityModel::Tabulated { samples: vec![(0.0, 0.0), (1.0, 0.5), (2.0, 0.1)] };
    assert!(matches!(m.eval(2.5), Err(BathError::OutOfTabulatedRange(..))));
    assert!(m.eval(1.5).is_ok());
}

#[test]
fn fmo_matches_independent_formula_sum() {
    // independent re-implementation of the two structured-density pieces,
    // written directly from the closed forms
    let p = FmoParameters::bundled(1.0 / 15.0);
    let omega = 46.0;

    let ar = {
        let pref = 0.29 / (0.8 + 0.5);
        let w1 = 0.069 * 8.065_543_937;
        let w2 = 0.24 * 8.065_543_937;
        let t = |s: f64, wi: f64| {
            s / (5040.0 * 2.0 * wi.powi(4)) * omega.powi(5) * (-(omega / wi).sqrt()).exp()
        };
        pref * (t(0.8, w1) + t(0.5, w2))
    };
    let comb: f64 = p
        .modes
        .iter()
        .map(|m| {
            4.0 * m.omega_k * m.s_k * m.gamma_k * (m.omega_k.powi(2) + m.gamma_k.powi(2)) * omega
                / (std::f64::consts::PI
                    * ((omega + m.omega_k).powi(2) + m.gamma_k.powi(2))
                    * ((omega - m.omega_k).powi(2) + m.gamma_k.powi(2)))
        })
        .sum();
    let expected = (ar + comb) / 15.0;

    let model = SpectralDensityModel::StructuredFmo(p);
    let got = model.eval(omega).unwrap();
    assert!((got - expected).abs() <= 1e-12 * expected.abs(), "got {got}, expected {expected}");
}

#[test]
fn fmo_huang_rhys_checksum() {
    let p = FmoParameters::bundled(1.0 / 15.0);
    assert_eq!(p.modes.len(), FMO_MODE_COUNT);
    assert!((p.huang_rhys_sum() - 0.319).abs() < 1e-12);
}

#[test]
fn zero_density_gives_zero_correlation() {
    let bath = BathSpec::new(
        SpectralDensityModel::Tabulated { samples: vec![(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)] },
        1.0,
    )
    .unwrap();
    for &tau in &[0.0, 0.7, 3.0] {
        assert!(bath.correlation(tau).unwrap().norm() < 1e-30);
    }
}

#[test]
fn correlation_at_zero_is_real_positive_golden() {
    // golden value frozen from this quadrature at development time
    let bath = underdamped(20.0);
    let c0 = bath.correlation(0.0).unwrap();
    assert!(c0.im.abs() < 1e-10 * c0.re.abs());
    assert!(c0.re > 0.0);
    let golden = 0.293_641_962_936_931_7;
    assert!(
        (c0.re - golden).abs() < 1e-8 * golden,
        "C(0) = {:.16e} drifted from golden {:.16e}",
        c0.re,
        golden
    );
}

#[test]
fn correlation_conjugate_symmetry() {
    let bath = underdamped(20.0);
    let plus = bath.correlation(1.0).unwrap();
    let minus = bath.correlation(-1.0).unwrap();
    // negative times are constructed as conjugates, so this is bit-exact
    assert_eq!(plus.re, minus.re);
    assert_eq!(plus.im, -minus.im);
}

#[test]
fn power_spectrum_zero_temperature_limit() {
    let bath = underdamped(f64::INFINITY);
    let j = bath.model.eval(0.8).unwrap();
    assert!((bath.power_spectrum(0.8).unwrap() - 2.0 * j).abs() < 1e-15);
    assert_eq!(bath.power_spectrum(-0.8).unwrap(), 0.0);
}

#[test]
fn power_spectrum_detailed_balance_identity() {
    let bath = underdamped(20.0);
    // S(ω)/S(-ω) = e^{βω} at the resonance, β ω₀ = 24
    let ratio = bath.power_spectrum(1.2).unwrap() / bath.power_spectrum(-1.2).unwrap();
    assert!((ratio - (24.0_f64).exp()).abs() <= 1e-12 * (24.0_f64).exp());
}

#[test]
fn detailed_balance_across_frequency_range() {
    let bath = underdamped(2.5);
    for &w in &[0.05, 0.3, 0.9, 1.2, 2.4, 5.0, 12.0] {
        let lhs = bath.power_spectrum(w).unwrap();
        let rhs = (bath.beta * w).exp() * bath.power_spectrum(-w).unwrap();
        assert!(
            (lhs - rhs).abs() <= 1e-12 * lhs.abs(),
            "detailed balance violated at ω = {w}: {lhs} vs {rhs}"
        );
        assert!(lhs >= 0.0 && bath.power_spectrum(-w).unwrap() >= 0.0);
    }
}

#[test]
fn power_spectrum_zero_frequency_limit() {
    // Ohmic s=1: S(0) = 2 J'(0)/β = 2α/β
    let bath = BathSpec::new(
        SpectralDensityModel::OhmicFamily { alpha: 0.7, s: 1.0, omega_c: 2.0 },
        4.0,
    )
    .unwrap();
    assert!((bath.power_spectrum(0.0).unwrap() - 2.0 * 0.7 / 4.0).abs() < 1e-14);
    // and continuity: S(ε) → S(0)
    let eps = bath.power_spectrum(1e-7).unwrap();
    assert!((eps - 0.35).abs() < 1e-5);

    // sub-Ohmic has no finite limit
    let sub = BathSpec::new(
        SpectralDensityModel::OhmicFamily { alpha: 0.7, s: 0.5, omega_c: 2.0 },
        4.0,
    )
    .unwrap();
    assert!(matches!(sub.power_spectrum(0.0), Err(BathError::UndefinedAtZero)));
}

#[test]
fn fourier_transform_of_correlation_matches_power_spectrum() {
    // S(ω) = 2 Re ∫₀^∞ C(t) e^{iωt} dt, evaluated by Simpson on quadrature
    // samples of C
    let bath = underdamped(20.0);
    let t_max = 45.0;
    let n = 3001; // odd for Simpson
    let ts = linspace(0.0, t_max, n);
    let c: Vec<crate::C64> = ts.iter().map(|&t| bath.correlation_with_tol(t, 1e-9).unwrap()).collect();
    let h = ts[1] - ts[0];

    for &w in &[0.5, -0.5, 1.2, -1.2] {
        let mut acc = crate::C64::new(0.0, 0.0);
        for k in 0..n {
            let weight = if k == 0 || k == n - 1 {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            acc += weight * c[k] * crate::C64::new(0.0, w * ts[k]).exp();
        }
        let ft = 2.0 * (acc * h / 3.0).re;
        let exact = bath.power_spectrum(w).unwrap();
        let denom = bath.power_spectrum(w.abs()).unwrap();
        assert!(
            (ft - exact).abs() <= 1e-4 * denom,
            "FT mismatch at ω={w}: {ft} vs {exact}"
        );
    }
}

#[test]
fn monotone_interpolation_stays_positive() {
    // data with a sharp step: a plain cubic spline would overshoot below zero
    let samples = vec![(0.0, 0.0), (1.0, 0.0), (1.2, 0.0), (1.4, 1.0), (2.0, 1.0), (3.0, 0.2)];
    let m = SpectralDensityModel::Tabulated { samples };
    for &w in linspace(0.0, 3.0, 301).iter() {
        let j = m.eval(w).unwrap();
        assert!(j >= -1e-14, "negative interpolant {j} at ω = {w}");
    }
}

#[test]
fn invalid_inputs_rejected() {
    assert!(BathSpec::new(
        SpectralDensityModel::OhmicFamily { alpha: 1.0, s: 1.0, omega_c: 1.0 },
        -1.0
    )
    .is_err());
    assert!(SpectralDensityModel::Tabulated { samples: vec![(0.0, 0.0), (0.0, 1.0)] }
        .validate()
        .is_err());
    assert!(SpectralDensityModel::Tabulated { samples: vec![(0.0, 0.0), (1.0, -0.5)] }
        .validate()
        .is_err());
}

#[test]
fn beta_infinity_correlation_is_plain_fourier() {
    // at T=0, C(τ) = (1/π) ∫ J e^{-iωτ} dω; check against a directly coded
    // Simpson integral on a fine grid
    let bath = underdamped(f64::INFINITY);
    let tau = 0.9;
    let n = 200_001;
    let ws = linspace(0.0, 400.0, n);
    let h = ws[1] - ws[0];
    let mut acc = crate::C64::new(0.0, 0.0);
    for (k, &w) in ws.iter().enumerate() {
        let weight = if k == 0 || k == n - 1 {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let j = bath.model.eval(w).unwrap();
        acc += weight * j * crate::C64::new(0.0, -w * tau).exp();
    }
    let reference = acc * h / 3.0 / std::f64::consts::PI;
    let got = bath.correlation(tau).unwrap();
    assert!((got - reference).norm() < 2e-6 * reference.norm() + 1e-9);
}
