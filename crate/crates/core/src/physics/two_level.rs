//! Two-level resonance: Breit-Wigner temporal function and resolvent delay.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Transition frequency with complete width `gamma` and natural width `gamma0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelParams {
    omega0: f64,
    gamma: f64,
    gamma0: f64,
}

impl TwoLevelParams {
    /// Requires `omega0 > 0`, `gamma > 0` and `gamma ≥ gamma0 ≥ 0`.
    pub fn new(omega0: f64, gamma: f64, gamma0: f64) -> Result<Self> {
        let finite = omega0.is_finite() && gamma.is_finite() && gamma0.is_finite();
        if !finite || !(omega0 > 0.0) || !(gamma > 0.0) || !(gamma0 >= 0.0) || gamma0 > gamma {
            return Err(Error::InvalidParameter(format!(
                "two-level system needs omega0 > 0 and gamma >= gamma0 >= 0, got {omega0}, {gamma}, {gamma0}"
            )));
        }
        Ok(Self { omega0, gamma, gamma0 })
    }

    /// Resonance without a separate natural width.
    pub fn resonance(omega0: f64, gamma: f64) -> Result<Self> {
        Self::new(omega0, gamma, 0.0)
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }
}

/// Sign choice in `1/[π(γ/2 ± i(ω-ω₀))]`.
///
/// `Lower` is the log-derivative of a retarded pole `1/(ω-ω₀+iγ/2)`;
/// `Upper` is its mirror, with `τ₂` of opposite sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BreitWignerBranch {
    #[default]
    Upper,
    Lower,
}

/// `τ = 1/[π(γ/2 ± i(ω-ω₀))]` as `(τ₁, τ₂)`.
pub fn breit_wigner_tau(params: &TwoLevelParams, omega: f64, branch: BreitWignerBranch) -> (f64, f64) {
    let x = omega - params.omega0;
    let half = 0.5 * params.gamma;
    let d = PI * (x * x + half * half);
    let tau2 = match branch {
        BreitWignerBranch::Upper => -x / d,
        BreitWignerBranch::Lower => x / d,
    };
    (half / d, tau2)
}

/// Complex form of [`breit_wigner_tau`].
pub fn breit_wigner_tau_complex(params: &TwoLevelParams, omega: f64, branch: BreitWignerBranch) -> Complex64 {
    let (t1, t2) = breit_wigner_tau(params, omega, branch);
    Complex64::new(t1, t2)
}

/// Delay operator element `i{[E-E₁-iΓ/2]⁻¹ - [E-E₁-iΓ₀/2]⁻¹}` of one level.
pub fn resolvent_delay(params: &TwoLevelParams, energy: f64) -> Complex64 {
    let x = energy - params.omega0;
    let full = 1.0 / Complex64::new(x, -0.5 * params.gamma);
    let natural = 1.0 / Complex64::new(x, -0.5 * params.gamma0);
    Complex64::i() * (full - natural)
}

/// Sum of [`resolvent_delay`] over several levels.
pub fn resolvent_delay_levels(levels: &[TwoLevelParams], energy: f64) -> Complex64 {
    levels.iter().map(|p| resolvent_delay(p, energy)).sum()
}
