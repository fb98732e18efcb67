//! Blaschke-product scattering models.
//!
//! A [`PoleZeroModel`] is
//!
//! ```text
//! S(ω) = scale · ω^(-p) · Π_n (ω - ω_n - iγ_n/2) / (ω - ω_n + iγ_n/2)
//! ```
//!
//! with every zero in the upper half-plane and every pole mirrored into the
//! lower half-plane. For `|scale| = 1` and `p = 0` the model has unit modulus
//! on the real axis, the canonical lossless causal S-matrix.
//!
//! Temporal functions follow one convention throughout the crate:
//! `τ = τ₁ + iτ₂ = -i ∂_ω ln S`, so `τ₁ = ∂_ω arg S` and `τ₂ = -∂_ω ln|S|`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default minimum distance between an evaluation point and a pole.
pub const POLE_THRESHOLD: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// One zero/pole pair: centre `omega` and width `gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resonance {
    pub omega: f64,
    pub gamma: f64,
}

impl Resonance {
    pub fn new(omega: f64, gamma: f64) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidParameter(format!("resonance frequency must be > 0, got {omega}")));
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::InvalidParameter(format!("resonance width must be > 0, got {gamma}")));
        }
        Ok(Self { omega, gamma })
    }

    /// Upper half-plane zero `ω_n + iγ_n/2`.
    pub fn zero(&self) -> Complex64 {
        Complex64::new(self.omega, 0.5 * self.gamma)
    }

    /// Lower half-plane pole `ω_n - iγ_n/2`.
    pub fn pole(&self) -> Complex64 {
        Complex64::new(self.omega, -0.5 * self.gamma)
    }
}

/// Sign of the `±ip/ω` prefactor term in the closed-form temporal function.
///
/// `Upper` is what differentiating `ω^(-p)` gives under the crate's
/// convention; `Lower` is exposed for comparison with the opposite sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrefactorBranch {
    #[default]
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoleZeroModel {
    scale: Complex64,
    power: u32,
    resonances: Vec<Resonance>,
}

impl Default for PoleZeroModel {
    fn default() -> Self {
        Self { scale: Complex64::new(1.0, 0.0), power: 0, resonances: Vec::new() }
    }
}

impl PoleZeroModel {
    pub fn new(scale: Complex64, power: u32, resonances: Vec<Resonance>) -> Result<Self> {
        if !scale.is_finite() || scale.norm() == 0.0 {
            return Err(Error::InvalidParameter(format!("scale must be finite and nonzero, got {scale}")));
        }
        for r in &resonances {
            Resonance::new(r.omega, r.gamma)?;
        }
        Ok(Self { scale, power, resonances })
    }

    /// Unit scale, no `ω^(-p)` prefactor.
    pub fn blaschke(resonances: &[(f64, f64)]) -> Result<Self> {
        let resonances = resonances
            .iter()
            .map(|&(w, g)| Resonance::new(w, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Complex64::new(1.0, 0.0), 0, resonances)
    }

    pub fn with_power(mut self, power: u32) -> Self {
        self.power = power;
        self
    }

    pub fn with_scale(self, scale: Complex64) -> Result<Self> {
        Self::new(scale, self.power, self.resonances)
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn resonances(&self) -> &[Resonance] {
        &self.resonances
    }

    /// Zeros of S, with multiplicity. Every resonance contributes one.
    pub fn zeros(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.resonances.iter().map(Resonance::zero)
    }

    /// Poles of S, with multiplicity, including `p` poles at the origin.
    pub fn poles(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.resonances
            .iter()
            .map(Resonance::pole)
            .chain(std::iter::repeat_n(Complex64::new(0.0, 0.0), self.power as usize))
    }

    fn check_poles(&self, omega: Complex64, threshold: f64) -> Result<()> {
        for pole in self.poles() {
            let distance = (omega - pole).norm();
            if distance <= threshold {
                return Err(Error::PoleProximity { omega, distance });
            }
        }
        Ok(())
    }

    /// `S(ω)` at a complex frequency.
    pub fn evaluate(&self, omega: Complex64) -> Result<Complex64> {
        self.evaluate_with_threshold(omega, POLE_THRESHOLD)
    }

    pub fn evaluate_with_threshold(&self, omega: Complex64, threshold: f64) -> Result<Complex64> {
        self.check_poles(omega, threshold)?;
        let product: Complex64 = self
            .resonances
            .iter()
            .map(|r| (omega - r.zero()) / (omega - r.pole()))
            .product();
        Ok(self.scale * omega.powi(-(self.power as i32)) * product)
    }

    /// `S(ω)` on the real axis.
    pub fn evaluate_real(&self, omega: f64) -> Result<Complex64> {
        self.evaluate(Complex64::new(omega, 0.0))
    }

    /// `-i d ln S/dω` at a complex frequency; analytic away from zeros and poles.
    pub fn log_derivative_tau(&self, omega: Complex64) -> Result<Complex64> {
        self.check_poles(omega, POLE_THRESHOLD)?;
        let mut dlog = Complex64::new(0.0, 0.0);
        if self.power > 0 {
            dlog -= self.power as f64 / omega;
        }
        for r in &self.resonances {
            dlog += 1.0 / (omega - r.zero()) - 1.0 / (omega - r.pole());
        }
        Ok(-I * dlog)
    }

    /// Closed-form `τ(ω) = τ₁ + iτ₂` on the real axis.
    ///
    /// Each resonance contributes `γ / ((ω-ω_n)² + γ²/4)` to `τ₁` and
    /// nothing to `τ₂`; the prefactor contributes `+ip/ω`.
    pub fn tau(&self, omega: f64) -> Result<Complex64> {
        self.tau_with_branch(omega, PrefactorBranch::Upper)
    }

    pub fn tau_with_branch(&self, omega: f64, branch: PrefactorBranch) -> Result<Complex64> {
        self.check_poles(Complex64::new(omega, 0.0), POLE_THRESHOLD)?;
        let tau1: f64 = self
            .resonances
            .iter()
            .map(|r| {
                let x = omega - r.omega;
                r.gamma / (x * x + 0.25 * r.gamma * r.gamma)
            })
            .sum();
        let prefactor = match branch {
            PrefactorBranch::Upper => self.power as f64 / omega,
            PrefactorBranch::Lower => -(self.power as f64) / omega,
        };
        let tau2 = if self.power > 0 { prefactor } else { 0.0 };
        Ok(Complex64::new(tau1, tau2))
    }
}

/// Free-function form of [`PoleZeroModel::evaluate`].
pub fn evaluate_model(model: &PoleZeroModel, omega: Complex64) -> Result<Complex64> {
    model.evaluate(omega)
}

/// Free-function form of [`PoleZeroModel::tau`].
pub fn model_tau(model: &PoleZeroModel, omega: f64) -> Result<Complex64> {
    model.tau(omega)
}
