//! Kramers-Krönig residuals.
//!
//! A response analytic in the upper half-plane satisfies
//! `S(ω) = (1/πi) PV ∫ S(η)/(η - ω) dη`, i.e. `S + i·H[S] = 0`.

use num_complex::Complex64;

use crate::dispersion::hilbert::{hilbert_transform_complex, tail_fit_nodes, TailModel};
use crate::error::Result;
use crate::reconstruct::extend_negative_frequencies;
use crate::spectrum::{ComplexSpectrum, FrequencyGrid, TemporalSpectrum};

/// Nodes closer to the origin than this fraction of the step count as sampling it.
const ORIGIN_NODE_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct KKReport {
    /// `max |S + iH[S]|` over the evaluated nodes, divided by `max |S|`.
    pub residual_max: f64,
    /// `‖S + iH[S]‖₂ / ‖S‖₂` over the evaluated nodes.
    pub residual_l2: f64,
    pub tail_model: TailModel,
    /// Unnormalised maximum residual.
    pub residual_max_abs: f64,
    /// Frequency where the maximum residual occurs.
    pub argmax_omega: f64,
    /// Index range of evaluated nodes; the tail-fit bands at both ends are skipped.
    pub evaluated: std::ops::Range<usize>,
    /// Distance from the origin to the nearest node, when the grid straddles
    /// `ω = 0` without sampling it.
    pub origin_exclusion: Option<f64>,
}

fn origin_exclusion(grid: &FrequencyGrid) -> Option<f64> {
    if !(grid.first() < 0.0 && grid.last() > 0.0) {
        return None;
    }
    let nearest = grid.omegas().iter().map(|w| w.abs()).fold(f64::INFINITY, f64::min);
    (nearest > ORIGIN_NODE_RTOL * grid.step()).then_some(nearest)
}

fn residual_report(values: &[Complex64], grid: &FrequencyGrid, tail: TailModel) -> Result<KKReport> {
    let transformed = hilbert_transform_complex(values, grid, tail)?;
    let n = values.len();
    let skip = tail_fit_nodes(n).min((n - 1) / 2);
    let evaluated = skip..n - skip;

    let scale = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let (mut worst, mut at, mut sq, mut norm_sq) = (0.0, grid.omegas()[evaluated.start], 0.0, 0.0);
    for i in evaluated.clone() {
        let r = (values[i] + Complex64::i() * transformed[i]).norm();
        if r > worst {
            worst = r;
            at = grid.omegas()[i];
        }
        sq += r * r;
        norm_sq += values[i].norm_sqr();
    }
    let ratio = |a: f64, b: f64| if b > 0.0 { a / b } else { 0.0 };
    Ok(KKReport {
        residual_max: ratio(worst, scale),
        residual_l2: ratio(sq.sqrt(), norm_sq.sqrt()),
        tail_model: tail,
        residual_max_abs: worst,
        argmax_omega: at,
        evaluated,
        origin_exclusion: origin_exclusion(grid),
    })
}

/// Causality residual of a sampled response on a uniform grid.
pub fn kk_residual(spectrum: &ComplexSpectrum, tail: TailModel) -> Result<KKReport> {
    residual_report(spectrum.values(), spectrum.grid(), tail)
}

/// Causality residual of `τ = τ₁ + iτ₂`.
///
/// Strictly positive grids are first continued to negative frequency with
/// `τ(-ω) = τ*(ω)`; build them with [`FrequencyGrid::half_offset`] so the
/// mirrored grid stays uniform.
pub fn tau_kk_residual(tau: &TemporalSpectrum, tail: TailModel) -> Result<KKReport> {
    let full = if tau.grid().first() > 0.0 { extend_negative_frequencies(tau)? } else { tau.clone() };
    residual_report(&full.complex(), full.grid(), tail)
}
