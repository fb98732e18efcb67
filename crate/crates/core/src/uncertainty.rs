//! Energy-time spreads of a spectrum.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::spectrum::ComplexSpectrum;

/// Zero-padding factor applied before transforming to the time domain.
pub const TIME_PADDING: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyProduct {
    pub delta_e: f64,
    pub delta_t: f64,
    /// `⟨Eτ₁⟩ - 2⟨E⟩⟨τ₁⟩`, the correlation term as it enters the
    /// energy-time relation `(ΔEΔt)² ≥ ¼ + ¼·term²`.
    pub covariance_term: f64,
    /// `⟨Eτ₁⟩ - ⟨E⟩⟨τ₁⟩`, the shift-invariant covariance of the
    /// Robertson-Schrödinger bound `(ΔEΔt)² ≥ ¼ + cov²`.
    pub centered_covariance: f64,
    pub mean_energy: f64,
    pub mean_tau1: f64,
}

impl UncertaintyProduct {
    pub fn product(&self) -> f64 {
        self.delta_e * self.delta_t
    }

    /// Right-hand side `¼ + ¼·covariance_term²`.
    pub fn correlated_bound(&self) -> f64 {
        0.25 + 0.25 * self.covariance_term * self.covariance_term
    }

    /// Right-hand side `¼ + centered_covariance²`.
    pub fn robertson_bound(&self) -> f64 {
        0.25 + self.centered_covariance * self.centered_covariance
    }
}

/// Spreads of `|S(E)|²` and of `|S(t)|²`, plus the correlation terms.
///
/// Averages are weighted by `|S|²` on the energy grid. `S(t)` is the
/// discrete Fourier transform of the samples after zero-padding by
/// [`TIME_PADDING`]; its variance is taken in the periodic window centred on
/// the peak of `|S(t)|`.
pub fn uncertainty_product(spectrum: &ComplexSpectrum) -> Result<UncertaintyProduct> {
    let h = spectrum.grid().require_uniform()?;
    let e = spectrum.omegas();
    let s = spectrum.values();
    let n = s.len();

    let weight: Vec<f64> = s.iter().map(|v| v.norm_sqr()).collect();
    let norm: f64 = weight.iter().sum();
    if !(norm > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let mean = |f: &dyn Fn(usize) -> f64| (0..n).map(f).sum::<f64>() / norm;
    let mean_e = mean(&|j| e[j] * weight[j]);
    let var_e = mean(&|j| (e[j] - mean_e).powi(2) * weight[j]);

    // |S|² τ₁ = Im(S* dS/dE), free of phase unwrapping
    let ds: Vec<Complex64> = (0..n)
        .map(|j| match j {
            0 => (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * h),
            j if j == n - 1 => (3.0 * s[n - 1] - 4.0 * s[n - 2] + s[n - 3]) / (2.0 * h),
            j => (s[j + 1] - s[j - 1]) / (2.0 * h),
        })
        .collect();
    let weighted_tau: Vec<f64> = (0..n).map(|j| (s[j].conj() * ds[j]).im).collect();
    let mean_tau = mean(&|j| weighted_tau[j]);
    let mean_e_tau = mean(&|j| e[j] * weighted_tau[j]);

    let var_t = time_variance(s, h);

    Ok(UncertaintyProduct {
        delta_e: var_e.sqrt(),
        delta_t: var_t.sqrt(),
        covariance_term: mean_e_tau - 2.0 * mean_e * mean_tau,
        centered_covariance: mean_e_tau - mean_e * mean_tau,
        mean_energy: mean_e,
        mean_tau1: mean_tau,
    })
}

fn time_variance(s: &[Complex64], h: f64) -> f64 {
    let m = s.len() * TIME_PADDING;
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    buf[..s.len()].copy_from_slice(s);
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let power: Vec<f64> = buf.iter().map(|v| v.norm_sqr()).collect();
    let dt = 2.0 * PI / (m as f64 * h);

    let peak = power
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (k, &p)| if p > best.1 { (k, p) } else { best })
        .0 as isize;
    let half = (m / 2) as isize;
    let (mut total, mut first, mut second) = (0.0, 0.0, 0.0);
    for offset in -half..(m as isize - half) {
        let k = (peak + offset).rem_euclid(m as isize) as usize;
        let t = offset as f64 * dt;
        total += power[k];
        first += t * power[k];
        second += t * t * power[k];
    }
    let mean = first / total;
    second / total - mean * mean
}
