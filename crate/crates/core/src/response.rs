//! Time-domain response of a spectrally broadened signal.
//!
//! Expanding `ln R` to second order about a carrier `ω₀` and transforming
//! back gives a Gaussian envelope delayed by `τ` and widened by `σ`, cut by
//! an error-function edge whose sign depends on the sign of `τ₂`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Which error-function edge the response carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseBranch {
    /// `1 - erf(..)`, the retarded edge used when `τ₂ ≥ 0`.
    Normal,
    /// `1 + erf(..)`, used when `τ₂ < 0`.
    Anomalous,
}

impl ResponseBranch {
    /// Step-function selection by the sign of the formation time.
    pub fn for_tau2(tau2: f64) -> Self {
        if tau2 >= 0.0 {
            Self::Normal
        } else {
            Self::Anomalous
        }
    }
}

fn envelope(omega0: f64, tau: f64, sigma: f64, r0: Complex64, t: f64, branch: ResponseBranch) -> Result<Complex64> {
    if !(sigma > 0.0) {
        return Err(Error::NonPositiveSigma(sigma));
    }
    let u = t - tau;
    let edge = match branch {
        ResponseBranch::Normal => 1.0 - libm::erf(u / (2.0 * sigma).sqrt()),
        ResponseBranch::Anomalous => 1.0 + libm::erf(u / (2.0 * sigma).sqrt()),
    };
    let gauss = (-u * u / (2.0 * sigma)).exp();
    let carrier = Complex64::from_polar(1.0, -omega0 * t);
    Ok(r0 * carrier * (gauss * edge / (8.0 * PI * sigma).sqrt()))
}

/// `R⁺(t) = R(ω₀)(8πσ)^(-1/2) exp{-iω₀t - (t-τ)²/2σ}[1 - erf((t-τ)/√(2σ))]`.
pub fn normal_response(omega0: f64, tau: f64, sigma: f64, r0: Complex64, t: f64) -> Result<Complex64> {
    envelope(omega0, tau, sigma, r0, t, ResponseBranch::Normal)
}

/// Same envelope with the opposite error-function sign.
pub fn anomalous_response(omega0: f64, tau: f64, sigma: f64, r0: Complex64, t: f64) -> Result<Complex64> {
    envelope(omega0, tau, sigma, r0, t, ResponseBranch::Anomalous)
}

/// Normal or anomalous branch chosen by the sign of `tau2`.
pub fn combined_response(omega0: f64, tau: f64, tau2: f64, sigma: f64, r0: Complex64, t: f64) -> Result<Complex64> {
    envelope(omega0, tau, sigma, r0, t, ResponseBranch::for_tau2(tau2))
}
