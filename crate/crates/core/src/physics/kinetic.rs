//! Kinetic photon transport through a resonant gas, in CGS units.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Classical electron radius, cm.
pub const ELECTRON_RADIUS_CM: f64 = 2.81794e-13;
/// Speed of light, cm/s.
pub const LIGHT_SPEED_CM_S: f64 = 2.9979e10;
/// Loschmidt number density, cm⁻³.
pub const LOSCHMIDT_CM3: f64 = 2.69e19;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticMediumParams {
    /// Electron density `N`, cm⁻³.
    pub electron_density: f64,
    /// Photon wavenumber `k`, cm⁻¹.
    pub wavenumber: f64,
    /// Resonance width `Γ`, s⁻¹.
    pub width: f64,
}

impl KineticMediumParams {
    pub fn new(electron_density: f64, wavenumber: f64, width: f64) -> Result<Self> {
        let finite = electron_density.is_finite() && wavenumber.is_finite() && width.is_finite();
        if !finite || electron_density < 0.0 || !(wavenumber > 0.0) || !(width > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "kinetic medium needs N >= 0, k > 0, width > 0, got {electron_density}, {wavenumber}, {width}"
            )));
        }
        Ok(Self { electron_density, wavenumber, width })
    }

    /// Unitarity limit `4π/k²`, cm².
    pub fn sigma_max(&self) -> f64 {
        4.0 * PI / (self.wavenumber * self.wavenumber)
    }

    /// Total cross-section `(4π/k)·r₀`, cm².
    pub fn sigma_total(&self) -> f64 {
        4.0 * PI * ELECTRON_RADIUS_CM / self.wavenumber
    }

    /// Delay at the resonance peak, `2/Γ`, s.
    pub fn tau_max(&self) -> f64 {
        2.0 / self.width
    }

    /// Mean free path `1/(N·σ_tot)`, cm; infinite in vacuum.
    pub fn mean_free_path(&self) -> f64 {
        1.0 / (self.electron_density * self.sigma_total())
    }
}

/// `τ̄₁ = σ_tot·τ_max/σ_max = 2kr₀/Γ`, seconds.
pub fn mean_delay(params: &KineticMediumParams) -> f64 {
    mean_delay_from(params.sigma_total(), params.sigma_max(), params.tau_max())
}

/// Balance relation with the three factors given explicitly.
pub fn mean_delay_from(sigma_total: f64, sigma_max: f64, tau_max: f64) -> f64 {
    sigma_total * tau_max / sigma_max
}

/// `c·4π·r₀²/Γ`, the density coefficient of `n_gr - 1`, cm³.
pub fn group_index_coefficient(params: &KineticMediumParams) -> f64 {
    LIGHT_SPEED_CM_S * 4.0 * PI * ELECTRON_RADIUS_CM * ELECTRON_RADIUS_CM / params.width
}

/// `n_gr = 1 + c·N·σ_tot·τ₁` with `τ₁ = kr₀/Γ`, half of [`mean_delay`].
pub fn group_index(params: &KineticMediumParams) -> f64 {
    let tau1 = 0.5 * mean_delay(params);
    1.0 + LIGHT_SPEED_CM_S * params.electron_density * params.sigma_total() * tau1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn optical(n: f64) -> KineticMediumParams {
        KineticMediumParams::new(n, 6.3e4, 1e8).unwrap()
    }

    #[test]
    fn optical_mean_delay() {
        let t = mean_delay(&optical(0.0));
        assert!((t - 2.0 * 6.3e4 * ELECTRON_RADIUS_CM / 1e8).abs() < 1e-30);
        assert!((t - 3.55e-16).abs() < 0.01e-16, "{t:e}");
        assert!((1e-16..1e-15).contains(&t));
    }

    #[test]
    fn delay_scales_with_wavenumber() {
        let a = mean_delay(&optical(0.0));
        let b = mean_delay(&KineticMediumParams::new(0.0, 6.3e3, 1e8).unwrap());
        assert!((a / b - 10.0).abs() < 1e-12);
    }

    #[test]
    fn resonance_delay() {
        let p = optical(0.0);
        assert_eq!(mean_delay_from(p.sigma_max(), p.sigma_max(), p.tau_max()), 2.0 / 1e8);
    }

    #[test]
    fn group_index_anchor() {
        let c = group_index_coefficient(&optical(0.0));
        assert!((c - 2.99e-22).abs() < 0.01e-22, "{c:e}");
        assert!((c / 3e-22 - 1.0).abs() < 0.2);
        assert_eq!(group_index(&optical(0.0)), 1.0);
        let n = group_index(&optical(LOSCHMIDT_CM3));
        assert!(((n - 1.0) - c * LOSCHMIDT_CM3).abs() < 1e-15);
        assert!(((n - 1.0) - 8.0e-3).abs() < 0.1e-3, "{}", n - 1.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(KineticMediumParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(KineticMediumParams::new(1.0, 0.0, 1.0).is_err());
        assert!(KineticMediumParams::new(1.0, 1.0, f64::NAN).is_err());
    }
}
