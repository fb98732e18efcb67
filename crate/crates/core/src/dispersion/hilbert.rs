//! Principal-value Hilbert transform on a uniform grid.
//!
//! `H[f](ω) = (1/π) PV ∫ f(η)/(η - ω) dη`, so a function analytic in the
//! upper half-plane and decaying at infinity obeys `H[f] = i f`.
//!
//! The singular cell is handled by subtracting `f(ω)`: the remainder
//! `(f(η) - f(ω))/(η - ω)` is regular (its value at `η = ω` is `f'(ω)`) and
//! the subtracted piece integrates to `f(ω) ln((b - ω)/(ω - a))`. Pairs of
//! nodes placed symmetrically about `ω` cancel their singular parts exactly.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::spectrum::FrequencyGrid;

/// How the integrand is continued beyond the sampled window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailModel {
    /// Integrand taken as zero outside the grid.
    #[default]
    None,
    /// `f ~ A/ω`, amplitude fitted separately on each end.
    OneOverOmega,
    /// `f ~ A/ω²`.
    OneOverOmegaSquared,
}

impl TailModel {
    fn power(self) -> Option<i32> {
        match self {
            Self::None => None,
            Self::OneOverOmega => Some(1),
            Self::OneOverOmegaSquared => Some(2),
        }
    }
}

/// Share of nodes at each end used to fit tail amplitudes.
pub const TAIL_FIT_FRACTION: f64 = 0.05;

pub(crate) fn tail_fit_nodes(n: usize) -> usize {
    ((TAIL_FIT_FRACTION * n as f64).round() as usize).clamp(2, n / 2)
}

/// `∫_b^∞ η^(-k) / (η - ω) dη` for `ω < b`, `k ∈ {1, 2}`.
fn right_tail_integral(k: i32, b: f64, omega: f64) -> f64 {
    let x = omega / b;
    if x.abs() < 0.1 {
        // Σ x^m/(m+1) and its shifted form, avoiding cancellation near ω = 0
        let (mut sum, mut term) = (0.0, 1.0);
        let start = if k == 1 { 0 } else { 1 };
        for m in start..40 {
            if m > start {
                term *= x;
            }
            sum += term / (m + 1) as f64;
        }
        sum / b.powi(k)
    } else {
        let log = -(-x).ln_1p();
        match k {
            1 => log / omega,
            _ => (log / x - 1.0) / (omega * b),
        }
    }
}

/// Least-squares amplitude `A` in `f ≈ A η^(-k)` over the given nodes.
fn fit_amplitude(k: i32, x: &[f64], f: &[Complex64]) -> Complex64 {
    let (mut num, mut den) = (Complex64::new(0.0, 0.0), 0.0);
    for (&w, &v) in x.iter().zip(f) {
        let basis = w.powi(-k);
        num += v * basis;
        den += basis * basis;
    }
    if den > 0.0 {
        num / den
    } else {
        Complex64::new(0.0, 0.0)
    }
}

/// Hilbert transform of complex samples.
///
/// Every output node is an independent sum in fixed order, so results are
/// identical whatever the thread count. The two end nodes have a
/// logarithmically divergent principal value and are evaluated with the
/// half-cell distance in place of zero; treat them as unreliable.
pub fn hilbert_transform_complex(f: &[Complex64], grid: &FrequencyGrid, tail: TailModel) -> Result<Vec<Complex64>> {
    let h = grid.require_uniform()?;
    grid.check_len(f.len())?;
    let x = grid.omegas();
    let n = x.len();
    let (a, b) = (grid.first(), grid.last());

    let tails = tail.power().map(|k| {
        let m = tail_fit_nodes(n);
        let right = (b > 0.0).then(|| fit_amplitude(k, &x[n - m..], &f[n - m..]));
        let left = (a < 0.0).then(|| fit_amplitude(k, &x[..m], &f[..m]));
        (k, left, right)
    });

    let out = (0..n)
        .into_par_iter()
        .map(|i| {
            let w = x[i];
            let fi = f[i];
            let slope = match i {
                0 => (f[1] - f[0]) / h,
                i if i == n - 1 => (f[n - 1] - f[n - 2]) / h,
                i => (f[i + 1] - f[i - 1]) / (2.0 * h),
            };
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let weight = if j == 0 || j == n - 1 { 0.5 * h } else { h };
                let term = if j == i { slope } else { (f[j] - fi) / (x[j] - w) };
                acc += term * weight;
            }
            let above = (b - w).max(0.5 * h);
            let below = (w - a).max(0.5 * h);
            acc += fi * (above / below).ln();
            if let Some((k, left, right)) = tails {
                if let Some(amp) = right {
                    let edge = if i == n - 1 { b + 0.5 * h } else { b };
                    acc += amp * right_tail_integral(k, edge, w);
                }
                if let Some(amp) = left {
                    let edge = if i == 0 { -a + 0.5 * h } else { -a };
                    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                    acc += amp * (sign * right_tail_integral(k, edge, -w));
                }
            }
            acc / PI
        })
        .collect();
    Ok(out)
}

/// Hilbert transform of real samples.
pub fn hilbert_transform(samples: &[f64], grid: &FrequencyGrid) -> Result<Vec<f64>> {
    hilbert_transform_with_tail(samples, grid, TailModel::None)
}

pub fn hilbert_transform_with_tail(samples: &[f64], grid: &FrequencyGrid, tail: TailModel) -> Result<Vec<f64>> {
    let f: Vec<Complex64> = samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    Ok(hilbert_transform_complex(&f, grid, tail)?.into_iter().map(|v| v.re).collect())
}
