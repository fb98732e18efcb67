//! One-particle temporal Wigner functions
//!
//! ```text
//! w⁺(ω, t) = (1/2π) ∫₀^∞ dτ e^{iωτ} ψ(t - τ/2) ψ*(t + τ/2)
//! w⁻(ω, t) = w⁺(-ω, t)
//! ```
//!
//! For a stationary state `ψ ∝ e^{-iEt}` the overlap is `e^{iEτ}`, so `w⁺`
//! peaks at `ω = -E` and `w⁻` at `ω = +E`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative amplitude below which a signal counts as decayed at the grid ends.
pub const SUPPORT_RTOL: f64 = 1e-6;

/// Wave function sampled on a uniform time grid `t0 + k·dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSignal {
    t0: f64,
    dt: f64,
    samples: Vec<Complex64>,
}

impl TimeSignal {
    pub fn new(t0: f64, dt: f64, samples: Vec<Complex64>) -> Result<Self> {
        if !(dt > 0.0) || !t0.is_finite() {
            return Err(Error::InvalidParameter(format!("time grid needs finite t0 and dt > 0, got t0={t0}, dt={dt}")));
        }
        if samples.len() < 3 {
            return Err(Error::TooFewPoints { min: 3, got: samples.len() });
        }
        if let Some(index) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { t0, dt, samples })
    }

    /// Samples `f` on `points` nodes spanning `[from, to]`.
    pub fn sample(from: f64, to: f64, points: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if points < 3 {
            return Err(Error::TooFewPoints { min: 3, got: points });
        }
        let dt = (to - from) / (points - 1) as f64;
        Self::new(from, dt, (0..points).map(|k| f(from + dt * k as f64)).collect())
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t_end(&self) -> f64 {
        self.t0 + self.dt * (self.samples.len() - 1) as f64
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Linear interpolation; `t` must lie inside the grid.
    fn at(&self, t: f64) -> Complex64 {
        let s = (t - self.t0) / self.dt;
        let k = (s.floor() as usize).min(self.samples.len() - 2);
        let frac = s - k as f64;
        self.samples[k] * (1.0 - frac) + self.samples[k + 1] * frac
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WignerOptions {
    /// Skip the decay check for signals that are periodic on the window.
    pub periodic: bool,
    /// Multiplies the integrand by `e^{-taper·τ}` when set.
    pub taper: Option<f64>,
}

fn check_support(psi: &TimeSignal, t: f64, options: &WignerOptions) -> Result<()> {
    if !(t > psi.t0 && t < psi.t_end()) {
        return Err(Error::InsufficientSupport(format!(
            "t = {t} not inside ({}, {})",
            psi.t0,
            psi.t_end()
        )));
    }
    if let Some(taper) = options.taper {
        if !(taper >= 0.0) {
            return Err(Error::InvalidParameter(format!("taper must be nonnegative, got {taper}")));
        }
    }
    if !options.periodic {
        let peak = psi.samples.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let ends = psi.samples[0].norm().max(psi.samples[psi.samples.len() - 1].norm());
        if ends > SUPPORT_RTOL * peak {
            return Err(Error::InsufficientSupport(format!(
                "end amplitude {ends:e} exceeds {SUPPORT_RTOL:e} of peak {peak:e}"
            )));
        }
    }
    Ok(())
}

/// `w⁺(ω, t)` by trapezoid over `τ = k·dt`, with ψ interpolated at the
/// half-steps `t ∓ τ/2`. The `τ` range is cut where either argument leaves
/// the sampled window.
pub fn temporal_wigner(psi: &TimeSignal, omega: f64, t: f64, options: &WignerOptions) -> Result<Complex64> {
    check_support(psi, t, options)?;
    let reach = (t - psi.t0).min(psi.t_end() - t);
    let steps = ((2.0 * reach / psi.dt) * (1.0 + 1e-12)).floor() as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=steps {
        let tau = k as f64 * psi.dt;
        let back = (t - 0.5 * tau).max(psi.t0);
        let ahead = (t + 0.5 * tau).min(psi.t_end());
        let mut term = Complex64::from_polar(1.0, omega * tau) * psi.at(back) * psi.at(ahead).conj();
        if let Some(taper) = options.taper {
            term *= (-taper * tau).exp();
        }
        let weight = if k == 0 || k == steps { 0.5 } else { 1.0 };
        acc += term * weight;
    }
    Ok(acc * (psi.dt / (2.0 * PI)))
}

/// `w⁻(ω, t) = w⁺(-ω, t)`.
pub fn temporal_wigner_minus(psi: &TimeSignal, omega: f64, t: f64, options: &WignerOptions) -> Result<Complex64> {
    temporal_wigner(psi, -omega, t, options)
}
