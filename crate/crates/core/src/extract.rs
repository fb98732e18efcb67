//! Finite-difference extraction of temporal functions from sampled spectra.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{derivative, second_derivative, unwrap_phase, StencilOrder};
use crate::spectrum::{ComplexSpectrum, FrequencyGrid, TemporalSpectrum};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractionOptions {
    pub stencil: StencilOrder,
    /// Largest phase step between neighbouring nodes accepted after unwrapping.
    pub unwrap_tolerance: f64,
    /// Smallest `|S|` for which a logarithm is taken.
    pub min_modulus: f64,
}

impl Default for ExtractionOptions {
    fn default() -> Self {
        Self { stencil: StencilOrder::Second, unwrap_tolerance: PI, min_modulus: 1e-12 }
    }
}

impl ExtractionOptions {
    pub fn fourth_order() -> Self {
        Self { stencil: StencilOrder::Fourth, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.unwrap_tolerance > 0.0) || !(self.min_modulus > 0.0) {
            return Err(Error::InvalidParameter("extraction tolerances must be positive".into()));
        }
        Ok(())
    }
}

/// Unwrapped phase and log-modulus of a spectrum.
fn log_parts(spectrum: &ComplexSpectrum, options: &ExtractionOptions) -> Result<(Vec<f64>, Vec<f64>)> {
    options.validate()?;
    for (index, v) in spectrum.values().iter().enumerate() {
        let modulus = v.norm();
        if modulus < options.min_modulus {
            return Err(Error::ZeroModulus { index, modulus });
        }
    }
    let phase = unwrap_phase(spectrum.values(), options.unwrap_tolerance)?;
    let log_modulus = spectrum.values().iter().map(|v| v.norm().ln()).collect();
    Ok((phase, log_modulus))
}

fn step_for(grid: &FrequencyGrid, stencil: StencilOrder) -> Result<Option<f64>> {
    match stencil {
        StencilOrder::Fourth => grid.require_uniform().map(Some),
        StencilOrder::Second => Ok(grid.is_uniform().then(|| grid.step())),
    }
}

/// `τ₁ = d(arg S)/dω`, `τ₂ = -d(ln|S|)/dω` by finite differences.
///
/// Edge nodes use one-sided stencils of the same order; their count is
/// recorded in [`TemporalSpectrum::edge_nodes`].
pub fn extract_temporal(spectrum: &ComplexSpectrum, options: &ExtractionOptions) -> Result<TemporalSpectrum> {
    let grid = spectrum.grid();
    let h = step_for(grid, options.stencil)?;
    let (phase, log_modulus) = log_parts(spectrum, options)?;
    let x = grid.omegas();
    let tau1 = derivative(x, &phase, options.stencil, h)?;
    let tau2 = derivative(x, &log_modulus, options.stencil, h)?.into_iter().map(|d| -d).collect();
    Ok(TemporalSpectrum::new(grid.clone(), tau1, tau2)?.with_edge_nodes(options.stencil.edge_nodes()))
}

/// Complex broadening `σ(ω) = -∂²_ω ln S`, equal to `-i dτ/dω`.
#[derive(Debug, Clone, PartialEq)]
pub struct BroadeningSpectrum {
    grid: FrequencyGrid,
    sigma: Vec<Complex64>,
    edge_nodes: usize,
}

impl BroadeningSpectrum {
    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn sigma(&self) -> &[Complex64] {
        &self.sigma
    }

    pub fn edge_nodes(&self) -> usize {
        self.edge_nodes
    }
}

pub fn broadening(spectrum: &ComplexSpectrum, options: &ExtractionOptions) -> Result<BroadeningSpectrum> {
    let grid = spectrum.grid();
    let h = step_for(grid, options.stencil)?;
    let (phase, log_modulus) = log_parts(spectrum, options)?;
    let x = grid.omegas();
    let re = second_derivative(x, &log_modulus, options.stencil, h)?;
    let im = second_derivative(x, &phase, options.stencil, h)?;
    let sigma = re.into_iter().zip(im).map(|(a, b)| -Complex64::new(a, b)).collect();
    Ok(BroadeningSpectrum { grid: grid.clone(), sigma, edge_nodes: options.stencil.edge_nodes() })
}
