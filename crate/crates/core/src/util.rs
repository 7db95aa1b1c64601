//! Small grid and scalar helpers shared across the crate.

use crate::C64;

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let h = (b - a) / (n - 1) as f64;
            (0..n).map(|i| a + h * i as f64).collect()
        }
    }
}

/// `n` logarithmically spaced points from `a` to `b` inclusive, `a, b > 0`.
pub fn logspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(a > 0.0 && b > 0.0, "logspace endpoints must be positive");
    linspace(a.ln(), b.ln(), n).into_iter().map(f64::exp).collect()
}

/// coth for real argument, accurate near zero and saturating for large |x|.
pub fn coth(x: f64) -> f64 {
    let ax = x.abs();
    if ax > 20.0 {
        x.signum()
    } else if ax < 1e-4 {
        // Laurent series: 1/x + x/3 - x^3/45
        1.0 / x + x / 3.0 - x * x * x / 45.0
    } else {
        1.0 / x.tanh()
    }
}

/// coth for complex argument. Saturates to ±1 for large |Re z| and uses the
/// Laurent series near the origin.
pub fn coth_complex(z: C64) -> C64 {
    if z.re < 0.0 {
        return -coth_complex(-z);
    }
    if z.re > 20.0 {
        C64::new(1.0, 0.0) + 2.0 * (-2.0 * z).exp()
    } else if z.norm() < 1e-4 {
        1.0 / z + z / 3.0 - z * z * z / 45.0
    } else {
        let e = (2.0 * z).exp();
        (e + 1.0) / (e - 1.0)
    }
}

/// Bose-Einstein occupation `1/(e^{βω} - 1)`. `beta = +∞` gives 0 for ω > 0.
pub fn bose_occupation(beta: f64, omega: f64) -> f64 {
    if beta.is_infinite() {
        return if omega > 0.0 { 0.0 } else { f64::INFINITY };
    }
    let x = beta * omega;
    if x.abs() < 1e-4 {
        // 1/(e^x - 1) = 1/x - 1/2 + x/12 + O(x^3)
        1.0 / x - 0.5 + x / 12.0
    } else {
        1.0 / x.exp_m1()
    }
}

/// `(e^z - 1)/z`, stable for small |z|.
pub fn expm1_over(z: C64) -> C64 {
    if z.norm() < 1e-4 {
        // 1 + z/2 + z^2/6 + z^3/24
        C64::new(1.0, 0.0) + z / 2.0 + z * z / 6.0 + z * z * z / 24.0
    } else {
        (z.exp() - 1.0) / z
    }
}

/// sin(x)/x with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_endpoints() {
        let g = linspace(-1.0, 2.0, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], -1.0);
        assert!((g[6] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn coth_matches_identity() {
        for &x in &[1e-6, 1e-3, 0.1, 1.0, 5.0, 30.0] {
            let direct = (x.exp() + (-x).exp()) / (x.exp() - (-x).exp());
            assert!((coth(x) - direct).abs() <= 1e-12 * direct.abs());
            assert!((coth(-x) + direct).abs() <= 1e-12 * direct.abs());
        }
    }

    #[test]
    fn coth_complex_matches_real() {
        for &x in &[0.3, 2.0, 15.0] {
            let c = coth_complex(C64::new(x, 0.0));
            assert!((c.re - coth(x)).abs() < 1e-12);
            assert!(c.im.abs() < 1e-14);
        }
    }

    #[test]
    fn bose_small_argument_series() {
        let direct = 1.0 / (0.5e-5_f64).exp_m1();
        assert!((bose_occupation(1.0, 0.5e-5) - direct).abs() / direct < 1e-10);
    }

    #[test]
    fn expm1_over_small() {
        let z = C64::new(1e-6, -2e-6);
        let direct = (z.exp() - 1.0) / z;
        assert!((expm1_over(z) - direct).norm() < 1e-12);
        assert!((expm1_over(C64::new(0.0, 0.0)) - 1.0).norm() < 1e-15);
    }
}
