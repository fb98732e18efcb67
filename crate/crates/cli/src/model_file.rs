//! Model documents: JSON objects tagged by `"type"`.
//!
//! ```json
//! {"type": "blaschke", "resonances": [{"omega": 1.0, "gamma": 0.2}], "power": 0}
//! {"type": "oscillator", "omega0": 1.0, "gamma": 0.2}
//! {"type": "lorentz", "plasma_frequency": 1.0, "omega0": 1.0, "gamma": 0.2}
//! {"type": "breit_wigner", "omega0": 5.0, "gamma": 0.4, "branch": "lower"}
//! {"type": "photon", "k": 1.0, "eta": 1e-3}
//! {"type": "pole", "omega0": 1.0, "gamma": 0.2, "side": "lower"}
//! {"type": "barrier", "segments": [{"width": 2.0, "height": 1.0}]}
//! ```
//!
//! Unknown fields are rejected; parameters are revalidated on load.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use scatter_time::physics::lorentz::LorentzMediumParams;
use scatter_time::physics::oscillator::{oscillator_green, oscillator_tau, OscillatorParams};
use scatter_time::physics::qed::{photon_propagator, photon_tau};
use scatter_time::physics::two_level::{breit_wigner_tau, BreitWignerBranch, TwoLevelParams};
use scatter_time::scatter1d::{formation_time, s_matrix, wigner_delay, PotentialProfile, Segment};
use scatter_time::{PoleZeroModel, Resonance, Result};
use serde::Deserialize;

use crate::error::{CliError, CliResult, Context};
use crate::io::read_text;

/// Finite-difference step for barrier temporal functions.
pub const BARRIER_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResonanceSpec {
    omega: f64,
    gamma: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentSpec {
    width: f64,
    height: f64,
}

#[derive(Debug, Clone, Copy, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
enum BranchSpec {
    #[default]
    Upper,
    Lower,
}

/// Half-plane holding a single pole; `lower` is the retarded (causal) one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PoleSide {
    #[default]
    Lower,
    Upper,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum ModelSpec {
    Blaschke {
        resonances: Vec<ResonanceSpec>,
        #[serde(default)]
        power: u32,
        #[serde(default)]
        scale: Option<[f64; 2]>,
    },
    Oscillator {
        omega0: f64,
        gamma: f64,
    },
    Lorentz {
        plasma_frequency: f64,
        omega0: f64,
        gamma: f64,
    },
    BreitWigner {
        omega0: f64,
        gamma: f64,
        #[serde(default)]
        branch: BranchSpec,
    },
    Photon {
        k: f64,
        eta: f64,
    },
    Barrier {
        segments: Vec<SegmentSpec>,
    },
    Pole {
        omega0: f64,
        gamma: f64,
        #[serde(default)]
        side: PoleSide,
    },
}

/// A validated model.
#[derive(Debug, Clone)]
pub enum Model {
    Blaschke(PoleZeroModel),
    Oscillator(OscillatorParams),
    Lorentz(LorentzMediumParams),
    BreitWigner(TwoLevelParams, BreitWignerBranch),
    Photon { k: f64, eta: f64 },
    Barrier(PotentialProfile),
    /// `1/(ω - z)` with `z = ω₀ ∓ iγ/2`.
    Pole(Complex64),
}

impl Model {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let spec: ModelSpec = serde_json::from_str(text).map_err(|e| e.to_string())?;
        spec.validate().map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        Self::parse(&read_text(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Self::Blaschke(_) => "blaschke",
            Self::Oscillator(_) => "oscillator",
            Self::Lorentz(_) => "lorentz",
            Self::BreitWigner(..) => "breit_wigner",
            Self::Photon { .. } => "photon",
            Self::Barrier(_) => "barrier",
            Self::Pole(_) => "pole",
        }
    }

    /// The sampled response: `S(ω)`, the Green function, `ε - 1`, a
    /// spectrum whose temporal function is the Breit-Wigner form, the photon
    /// propagator, or the transmission amplitude.
    pub fn response(&self, omega: f64) -> Result<Complex64> {
        match self {
            Self::Blaschke(m) => m.evaluate_real(omega),
            Self::Oscillator(p) => Ok(oscillator_green(p, omega)),
            Self::Lorentz(p) => {
                let wp = p.plasma_frequency();
                Ok(2.0 * PI * wp * wp * oscillator_green(p.oscillator(), omega))
            }
            Self::BreitWigner(p, branch) => {
                let half = 0.5 * p.gamma();
                let x = omega - p.omega0();
                Ok(match branch {
                    BreitWignerBranch::Lower => Complex64::new(x, half).powf(-1.0 / PI),
                    BreitWignerBranch::Upper => Complex64::new(x, -half).powf(1.0 / PI),
                })
            }
            Self::Photon { k, eta } => photon_propagator(omega, *k, *eta),
            Self::Barrier(profile) => Ok(s_matrix(profile, omega)?.t),
            Self::Pole(pole) => Ok(1.0 / (omega - pole)),
        }
    }

    /// Closed-form (or, for barriers, finely differenced) `(τ₁, τ₂)`.
    pub fn tau(&self, omega: f64) -> Result<(f64, f64)> {
        match self {
            Self::Blaschke(m) => m.tau(omega).map(|t| (t.re, t.im)),
            Self::Oscillator(p) => Ok(oscillator_tau(p, omega)),
            Self::Lorentz(p) => Ok(oscillator_tau(p.oscillator(), omega)),
            Self::BreitWigner(p, branch) => Ok(breit_wigner_tau(p, omega, *branch)),
            Self::Photon { k, eta } => photon_tau(omega, *k, *eta),
            Self::Barrier(profile) => Ok((
                wigner_delay(profile, omega, BARRIER_STEP)?,
                formation_time(profile, omega, BARRIER_STEP)?,
            )),
            Self::Pole(pole) => {
                let t = Complex64::i() / (omega - pole);
                Ok((t.re, t.im))
            }
        }
    }
}

impl ModelSpec {
    fn validate(self) -> Result<Model> {
        use scatter_time::Error::InvalidParameter;
        Ok(match self {
            Self::Blaschke { resonances, power, scale } => {
                let rs = resonances
                    .iter()
                    .map(|r| Resonance::new(r.omega, r.gamma))
                    .collect::<Result<Vec<_>>>()?;
                let [re, im] = scale.unwrap_or([1.0, 0.0]);
                Model::Blaschke(PoleZeroModel::new(Complex64::new(re, im), power, rs)?)
            }
            Self::Oscillator { omega0, gamma } => Model::Oscillator(OscillatorParams::new(omega0, gamma)?),
            Self::Lorentz { plasma_frequency, omega0, gamma } => {
                Model::Lorentz(LorentzMediumParams::new(plasma_frequency, OscillatorParams::new(omega0, gamma)?)?)
            }
            Self::BreitWigner { omega0, gamma, branch } => {
                let branch = match branch {
                    BranchSpec::Upper => BreitWignerBranch::Upper,
                    BranchSpec::Lower => BreitWignerBranch::Lower,
                };
                Model::BreitWigner(TwoLevelParams::resonance(omega0, gamma)?, branch)
            }
            Self::Photon { k, eta } => {
                if !(k > 0.0 && k.is_finite()) || !(eta > 0.0 && eta.is_finite()) {
                    return Err(InvalidParameter(format!("photon needs k > 0 and eta > 0, got {k}, {eta}")));
                }
                Model::Photon { k, eta }
            }
            Self::Barrier { segments } => Model::Barrier(PotentialProfile::new(
                segments.iter().map(|s| Segment { width: s.width, height: s.height }).collect(),
            )?),
            Self::Pole { omega0, gamma, side } => {
                if !omega0.is_finite() || !(gamma > 0.0 && gamma.is_finite()) {
                    return Err(InvalidParameter(format!("pole needs finite omega0 and gamma > 0, got {omega0}, {gamma}")));
                }
                let im = match side {
                    PoleSide::Lower => -0.5 * gamma,
                    PoleSide::Upper => 0.5 * gamma,
                };
                Model::Pole(Complex64::new(omega0, im))
            }
        })
    }
}

/// Loads a model and requires a pole-zero form.
pub fn load_pole_zero(path: &Path) -> CliResult<PoleZeroModel> {
    match Model::load(path)? {
        Model::Blaschke(m) => Ok(m),
        other => Err(CliError::Input(format!(
            "{}: contour integrals need a blaschke model, got {}",
            path.display(),
            other.type_name()
        ))),
    }
}

/// `response` and `tau` with the file name attached to failures.
pub fn sample(model: &Model, omega: f64, name: &str) -> CliResult<(Complex64, (f64, f64))> {
    let s = model.response(omega).context(name)?;
    let t = model.tau(omega).context(name)?;
    Ok((s, t))
}
