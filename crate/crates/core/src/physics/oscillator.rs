//! Damped harmonic oscillator.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Underdamped oscillator: natural frequency and damping rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    omega0: f64,
    gamma: f64,
}

impl OscillatorParams {
    /// Requires `0 < gamma < 2·omega0`.
    pub fn new(omega0: f64, gamma: f64) -> Result<Self> {
        if !(omega0 > 0.0 && omega0.is_finite()) || !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "oscillator needs omega0 > 0 and gamma > 0, got {omega0}, {gamma}"
            )));
        }
        if gamma >= 2.0 * omega0 {
            return Err(Error::InvalidParameter(format!("gamma {gamma} not below 2·omega0 (overdamped)")));
        }
        Ok(Self { omega0, gamma })
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Shifted frequency `sqrt(omega0² - gamma²/4)`.
    pub fn omega1(&self) -> f64 {
        (self.omega0 * self.omega0 - 0.25 * self.gamma * self.gamma).sqrt()
    }

    /// Poles of the Green function, `±omega1 - i·gamma/2`.
    pub fn poles(&self) -> [Complex64; 2] {
        let w1 = self.omega1();
        let d = -0.5 * self.gamma;
        [Complex64::new(w1, d), Complex64::new(-w1, d)]
    }
}

/// Fourier image of the retarded Green function,
/// `-1 / [2π(ω - ω₁ + iγ/2)(ω + ω₁ + iγ/2)]`.
pub fn oscillator_green(params: &OscillatorParams, omega: f64) -> Complex64 {
    let [p, q] = params.poles();
    let w = Complex64::new(omega, 0.0);
    -1.0 / (2.0 * PI * (w - p) * (w - q))
}

/// `(τ₁, τ₂)` of [`oscillator_green`]: one Lorentzian pair per pole.
pub fn oscillator_tau(params: &OscillatorParams, omega: f64) -> (f64, f64) {
    let half = 0.5 * params.gamma;
    let w1 = params.omega1();
    [omega - w1, omega + w1].iter().fold((0.0, 0.0), |(t1, t2), &x| {
        let d = x * x + half * half;
        (t1 + half / d, t2 + x / d)
    })
}

/// The term of [`oscillator_tau`] from the pole nearest `omega`.
pub fn oscillator_tau_near(params: &OscillatorParams, omega: f64) -> (f64, f64) {
    let half = 0.5 * params.gamma;
    let x = omega - params.omega1().copysign(omega);
    let d = x * x + half * half;
    (half / d, x / d)
}
