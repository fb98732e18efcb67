//! Lorentz medium: oscillator electrons with a plasma frequency.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::physics::oscillator::{oscillator_tau, OscillatorParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMediumParams {
    plasma_frequency: f64,
    oscillator: OscillatorParams,
}

impl LorentzMediumParams {
    pub fn new(plasma_frequency: f64, oscillator: OscillatorParams) -> Result<Self> {
        if !(plasma_frequency > 0.0 && plasma_frequency.is_finite()) {
            return Err(Error::InvalidParameter(format!("plasma frequency must be positive, got {plasma_frequency}")));
        }
        Ok(Self { plasma_frequency, oscillator })
    }

    pub fn plasma_frequency(&self) -> f64 {
        self.plasma_frequency
    }

    pub fn oscillator(&self) -> &OscillatorParams {
        &self.oscillator
    }
}

/// Width of the band around resonance excluded from the far-wing regime,
/// in units of the damping rate.
pub const WING_WIDTHS: f64 = 5.0;

/// Near-resonance `(ε₁ - 1, σ_el)`.
///
/// `ε₁ - 1 = ω_p²(ω₀-ω) / (2ω[(ω₀-ω)² + γ²/4])`,
/// `σ_el = ω_p² / (8πγ[(ω₀-ω)² + γ²/4])`.
pub fn lorentz_medium(params: &LorentzMediumParams, omega: f64) -> Result<(f64, f64)> {
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    let wp2 = params.plasma_frequency * params.plasma_frequency;
    let g = params.oscillator.gamma();
    let x = params.oscillator.omega0() - omega;
    let d = x * x + 0.25 * g * g;
    Ok((wp2 * x / (2.0 * omega * d), wp2 / (8.0 * PI * g * d)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumInequality {
    /// `τ₁ + τ₂` of the oscillator.
    pub lhs: f64,
    /// `1/ω`.
    pub rhs: f64,
    pub satisfied: bool,
    /// Whether `ω < ω₀ - 5γ`, the transparent low-frequency window where the
    /// comparison is meaningful. Outside it the values are still returned.
    pub in_regime: bool,
}

/// Compares `τ₁ + τ₂` with `1/ω`.
pub fn medium_inequality(params: &LorentzMediumParams, omega: f64) -> Result<MediumInequality> {
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    let (t1, t2) = oscillator_tau(&params.oscillator, omega);
    let lhs = t1 + t2;
    let rhs = 1.0 / omega;
    let osc = &params.oscillator;
    Ok(MediumInequality {
        lhs,
        rhs,
        satisfied: lhs < rhs,
        in_regime: omega < osc.omega0() - WING_WIDTHS * osc.gamma(),
    })
}
