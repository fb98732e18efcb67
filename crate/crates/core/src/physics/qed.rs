//! Lowest-order QED temporal functions: photon propagator, cross-section
//! slopes, and bremsstrahlung formation lengths.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{derivative, StencilOrder};
use crate::spectrum::FrequencyGrid;

/// `D_c = 4π/(ω² - k² + iη)`.
pub fn photon_propagator(omega: f64, k_abs: f64, eta: f64) -> Result<Complex64> {
    if !(eta > 0.0) {
        return Err(Error::NonPositiveEta(eta));
    }
    Ok(4.0 * PI / Complex64::new(omega * omega - k_abs * k_abs, eta))
}

/// `(τ₁, τ₂)` of [`photon_propagator`].
///
/// With `u = ω² - k²`: `τ₁ = 2ωη/(u² + η²)`, `τ₂ = 2ωu/(u² + η²)`. As
/// `η → 0`, `τ₂ → 2ω/u` (positive above the light cone, negative below) and
/// `τ₁` concentrates on `ω = |k|` with `∫₀^∞ τ₁ dω → π`.
pub fn photon_tau(omega: f64, k_abs: f64, eta: f64) -> Result<(f64, f64)> {
    if !(eta > 0.0) {
        return Err(Error::NonPositiveEta(eta));
    }
    let u = omega * omega - k_abs * k_abs;
    let d = u * u + eta * eta;
    Ok((2.0 * omega * eta / d, 2.0 * omega * u / d))
}

/// `τ₂ = -½ d ln σ/dω` by second-order differences.
pub fn cross_section_tau2(sigma: &[f64], grid: &FrequencyGrid) -> Result<Vec<f64>> {
    grid.check_len(sigma.len())?;
    if let Some(index) = sigma.iter().position(|s| !(*s > 0.0)) {
        return Err(Error::NonPositiveCrossSection { index, value: sigma[index] });
    }
    let log: Vec<f64> = sigma.iter().map(|s| s.ln()).collect();
    let step = grid.is_uniform().then(|| grid.step());
    let slope = derivative(grid.omegas(), &log, StencilOrder::Second, step)?;
    Ok(slope.into_iter().map(|d| -0.5 * d).collect())
}

/// `ε/m` and `ε′/m` at or above this ratio select the ultrarelativistic forms.
pub const ULTRARELATIVISTIC_RATIO: f64 = 10.0;
/// Tolerance on `ε - ε′ - ω`, relative to `max(1, ε)`.
pub const ENERGY_CONSERVATION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormationRegime {
    Moderate,
    Ultrarelativistic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Formation {
    pub tau2: f64,
    /// Longitudinal dressing length.
    pub rho2: f64,
    /// Transverse dressing length, only defined in the ultrarelativistic regime.
    pub rho_perp: Option<f64>,
    pub regime: FormationRegime,
}

/// Formation time and dressing lengths of photon emission `ε → ε′ + ω`.
pub fn bremsstrahlung_formation(epsilon: f64, epsilon_prime: f64, omega: f64, mass: f64, theta: f64) -> Result<Formation> {
    if ![epsilon, epsilon_prime, omega, mass, theta].iter().all(|v| v.is_finite()) || !(mass > 0.0) {
        return Err(Error::InvalidParameter("bremsstrahlung needs finite inputs and mass > 0".into()));
    }
    let mismatch = epsilon - epsilon_prime - omega;
    if mismatch.abs() > ENERGY_CONSERVATION_TOL * epsilon.abs().max(1.0) {
        return Err(Error::EnergyMismatch(mismatch));
    }
    if omega == 0.0 {
        return Err(Error::DegenerateFrequency);
    }
    for e in [epsilon, epsilon_prime] {
        if e < mass {
            return Err(Error::BelowMassShell { energy: e, mass });
        }
    }
    let m2 = mass * mass;
    if epsilon / mass >= ULTRARELATIVISTIC_RATIO && epsilon_prime / mass >= ULTRARELATIVISTIC_RATIO {
        let tau2 = 2.0 * epsilon * (epsilon_prime + omega) / (m2 * omega);
        return Ok(Formation {
            tau2,
            rho2: tau2,
            rho_perp: Some(2.0 * epsilon * theta / m2),
            regime: FormationRegime::Ultrarelativistic,
        });
    }
    let k = (epsilon * epsilon - m2).sqrt();
    let k_prime = (epsilon_prime * epsilon_prime - m2).sqrt();
    Ok(Formation {
        tau2: 1.0 / omega,
        rho2: k_prime / (epsilon * omega) + 0.5 * (k_prime - k) / (epsilon * epsilon_prime + m2),
        rho_perp: None,
        regime: FormationRegime::Moderate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn light_cone_sign() {
        let eta = 1e-8;
        assert_abs_diff_eq!(photon_tau(2.0, 1.0, eta).unwrap().1, 4.0 / 3.0, epsilon = 1e-6);
        assert_abs_diff_eq!(photon_tau(0.5, 1.0, eta).unwrap().1, -4.0 / 3.0, epsilon = 1e-6);
        assert!(photon_tau(5.0, 1.0, eta).unwrap().0 < 1e-9);
        assert_eq!(photon_tau(1.0, 1.0, eta).unwrap().1, 0.0);
    }

    #[test]
    fn tau_is_log_derivative_of_propagator() {
        let (w, k, eta) = (1.3, 1.0, 0.05);
        let h = 1e-6;
        let d = (photon_propagator(w + h, k, eta).unwrap() / photon_propagator(w - h, k, eta).unwrap()).ln() / (2.0 * h);
        let tau = -Complex64::i() * d;
        let (t1, t2) = photon_tau(w, k, eta).unwrap();
        assert!((tau.re - t1).abs() < 1e-6 && (tau.im - t2).abs() < 1e-6);
    }

    #[test]
    fn delay_integrates_to_pi() {
        // substitute u = ω² - k²: ∫ η/(u² + η²) du over u ≥ -k²
        let (k, eta) = (1.0, 1e-3);
        let n = 2_000_001;
        let (a, b) = (0.0, 3.0);
        let h = (b - a) / (n - 1) as f64;
        let total: f64 = (0..n).map(|j| photon_tau(a + h * j as f64, k, eta).unwrap().0).sum::<f64>() * h;
        assert!((total - PI).abs() < 2e-3, "{total}");
    }

    #[test]
    fn rejects_nonpositive_eta() {
        assert_eq!(photon_tau(1.0, 1.0, 0.0), Err(Error::NonPositiveEta(0.0)));
    }

    fn fine_grid(center: f64) -> FrequencyGrid {
        FrequencyGrid::linspace(center - 0.05, center + 0.05, 1001).unwrap()
    }

    #[test]
    fn rutherford_and_compton() {
        let g = fine_grid(2.0);
        let s: Vec<f64> = g.omegas().iter().map(|e| 3.0 / (e * e)).collect();
        assert_abs_diff_eq!(cross_section_tau2(&s, &g).unwrap()[500], 0.5, epsilon = 1e-4);
        let g = fine_grid(0.1);
        let s: Vec<f64> = g.omegas().iter().map(|w| 2.0 * (1.0 - 2.0 * w)).collect();
        assert_abs_diff_eq!(cross_section_tau2(&s, &g).unwrap()[500], 1.25, epsilon = 1e-3);
    }

    #[test]
    fn product_adds() {
        let g = FrequencyGrid::linspace(0.5, 3.0, 501).unwrap();
        let a: Vec<f64> = g.omegas().iter().map(|e| 1.0 / (e * e)).collect();
        let b: Vec<f64> = g.omegas().iter().map(|e| (-0.3 * e).exp() * (1.0 + e)).collect();
        let ab: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        let (ta, tb, tab) = (
            cross_section_tau2(&a, &g).unwrap(),
            cross_section_tau2(&b, &g).unwrap(),
            cross_section_tau2(&ab, &g).unwrap(),
        );
        for i in 0..g.len() {
            assert!((tab[i] - ta[i] - tb[i]).abs() < 1e-8);
        }
        let flat = vec![4.0; 501];
        let t = cross_section_tau2(&flat, &g).unwrap();
        assert!(t.iter().all(|t| t.abs() < 1e-10));
    }

    #[test]
    fn rejects_nonpositive_cross_section() {
        let g = FrequencyGrid::linspace(0.0, 1.0, 3).unwrap();
        assert_eq!(
            cross_section_tau2(&[1.0, 0.0, 1.0], &g),
            Err(Error::NonPositiveCrossSection { index: 1, value: 0.0 })
        );
    }

    #[test]
    fn formation_regimes() {
        let f = bremsstrahlung_formation(5.0, 3.0, 2.0, 1.0, 0.1).unwrap();
        assert_eq!(f.regime, FormationRegime::Moderate);
        assert_eq!(f.tau2, 0.5);
        assert!(f.rho_perp.is_none());
        let k = 24f64.sqrt();
        let kp = 8f64.sqrt();
        assert_abs_diff_eq!(f.rho2, kp / 10.0 + 0.5 * (kp - k) / 16.0, epsilon = 1e-15);

        let f = bremsstrahlung_formation(50.0, 49.0, 1.0, 1.0, 0.01).unwrap();
        assert_eq!(f.regime, FormationRegime::Ultrarelativistic);
        assert_abs_diff_eq!(f.tau2, 5000.0, epsilon = 1e-9);
        assert_abs_diff_eq!(f.rho_perp.unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn formation_errors() {
        assert_eq!(bremsstrahlung_formation(5.0, 5.0, 0.0, 1.0, 0.0), Err(Error::DegenerateFrequency));
        assert!(matches!(bremsstrahlung_formation(5.0, 3.0, 1.0, 1.0, 0.0), Err(Error::EnergyMismatch(_))));
        assert!(matches!(
            bremsstrahlung_formation(1.5, 0.5, 1.0, 1.0, 0.0),
            Err(Error::BelowMassShell { .. })
        ));
    }
}
