//! Sum rules linking a response to its temporal function.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectrum::{ComplexSpectrum, TemporalSpectrum};

/// Nodes with `|ω|` below this fraction of the grid span count as the origin.
pub const ORIGIN_RTOL: f64 = 1e-8;
/// Largest end-to-peak amplitude ratio accepted by [`time_sum_rule`].
pub const DECAY_RTOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencySumRule {
    /// `∫ dω/ω · S(ω)·[τ(ω) - i/ω]`.
    pub value: Complex64,
    /// `∫ |S/ω|·|τ| dω`, the natural size of the integral.
    pub l1_scale: f64,
    /// `∫ |S/ω·(τ - i/ω)| dω`, the L¹ norm of the integrand itself.
    pub integrand_l1: f64,
    /// Smallest `|ω|` on the grid.
    pub exclusion_radius: f64,
}

impl FrequencySumRule {
    /// `|value| / l1_scale`, or zero for a vanishing integrand.
    pub fn relative(&self) -> f64 {
        ratio(self.value.norm(), self.l1_scale)
    }

    /// `|value| / integrand_l1`; at most one.
    pub fn relative_to_integrand(&self) -> f64 {
        ratio(self.value.norm(), self.integrand_l1)
    }
}

fn ratio(a: f64, b: f64) -> f64 {
    if b > 0.0 {
        a / b
    } else {
        0.0
    }
}

/// Trapezoid value of `∫ dω/ω · S(ω)·[τ(ω) - i/ω]`.
///
/// The weight is singular at the origin, so the grid must avoid it; a grid
/// straddling zero is integrated as two pieces and the cell across the gap
/// is left out.
pub fn frequency_sum_rule(spectrum: &ComplexSpectrum, tau: &TemporalSpectrum) -> Result<FrequencySumRule> {
    if spectrum.grid() != tau.grid() {
        return Err(Error::GridMismatch);
    }
    let x = spectrum.omegas();
    let span = spectrum.grid().last() - spectrum.grid().first();
    let (index, min_abs) = x
        .iter()
        .enumerate()
        .map(|(i, w)| (i, w.abs()))
        .fold((0, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best });
    if min_abs <= ORIGIN_RTOL * span {
        return Err(Error::OriginInGrid { index, min_abs });
    }

    let tau_c = tau.complex();
    let integrand: Vec<Complex64> = (0..x.len())
        .map(|j| spectrum.values()[j] / x[j] * (tau_c[j] - Complex64::new(0.0, 1.0 / x[j])))
        .collect();
    let scale: Vec<f64> = (0..x.len()).map(|j| (spectrum.values()[j] / x[j]).norm() * tau_c[j].norm()).collect();

    let (mut value, mut l1, mut own) = (Complex64::new(0.0, 0.0), 0.0, 0.0);
    for j in 1..x.len() {
        if x[j - 1] < 0.0 && x[j] > 0.0 {
            continue;
        }
        let h = 0.5 * (x[j] - x[j - 1]);
        value += (integrand[j] + integrand[j - 1]) * h;
        l1 += (scale[j] + scale[j - 1]) * h;
        own += (integrand[j].norm() + integrand[j - 1].norm()) * h;
    }
    Ok(FrequencySumRule { value, l1_scale: l1, integrand_l1: own, exclusion_radius: min_abs })
}

fn decay_ratio(values: impl Iterator<Item = f64> + Clone) -> f64 {
    let peak = values.clone().fold(0.0, f64::max);
    let end = values.last().unwrap_or(0.0);
    if peak > 0.0 {
        end / peak
    } else {
        0.0
    }
}

/// Trapezoid value of `∫₀^∞ dt S(t)·τ(-t)` on the uniform grid `t = k·dt`.
///
/// `tau1_t` and `tau2_t` are the time images of the two real temporal
/// functions. Reality of `τ₁(ω)`, `τ₂(ω)` and the symmetry `τ(-ω) = τ*(ω)`
/// make `τ₁(t)` even and real and `τ₂(t)` odd and imaginary, so
/// `τ(-t) = τ₁(t) + i·conj(τ₂(t))`.
pub fn time_sum_rule(spectrum_time: &[Complex64], tau1_t: &[f64], tau2_t: &[Complex64], dt: f64) -> Result<Complex64> {
    let n = spectrum_time.len();
    if n < 2 {
        return Err(Error::TooFewPoints { min: 2, got: n });
    }
    for got in [tau1_t.len(), tau2_t.len()] {
        if got != n {
            return Err(Error::LengthMismatch { expected: n, got });
        }
    }
    if !(dt > 0.0) {
        return Err(Error::InvalidParameter(format!("time step must be positive, got {dt}")));
    }
    let tau_back: Vec<Complex64> = (0..n).map(|k| tau1_t[k] + Complex64::i() * tau2_t[k].conj()).collect();
    for ratio in [
        decay_ratio(spectrum_time.iter().map(|v| v.norm())),
        decay_ratio(tau1_t.iter().zip(tau2_t).map(|(a, b)| a.abs() + b.norm())),
    ] {
        if ratio > DECAY_RTOL {
            return Err(Error::InsufficientDecay { ratio });
        }
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let w = if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
        acc += spectrum_time[k] * tau_back[k] * w;
    }
    Ok(acc * dt)
}
