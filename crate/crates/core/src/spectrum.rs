//! Sampled frequency-domain data.
//!
//! A [`FrequencyGrid`] is the shared abscissa; [`ComplexSpectrum`] holds a
//! response or S-matrix element on it, [`TemporalSpectrum`] the pair of
//! temporal functions derived from one.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance on successive spacings for a grid to count as uniform.
pub const UNIFORM_RTOL: f64 = 1e-9;

/// Strictly increasing, finite frequencies with at least three nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    omegas: Vec<f64>,
    uniform: bool,
}

impl FrequencyGrid {
    pub fn new(omegas: Vec<f64>) -> Result<Self> {
        if omegas.len() < 3 {
            return Err(Error::TooFewPoints { min: 3, got: omegas.len() });
        }
        if let Some(index) = omegas.iter().position(|w| !w.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if let Some(index) = omegas.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::NotIncreasing { index: index + 1 });
        }
        let n = omegas.len();
        let mean = (omegas[n - 1] - omegas[0]) / (n - 1) as f64;
        let max_dev = omegas
            .windows(2)
            .map(|w| ((w[1] - w[0]) - mean).abs())
            .fold(0.0, f64::max);
        let uniform = max_dev < UNIFORM_RTOL * mean;
        Ok(Self { omegas, uniform })
    }

    /// `points` equally spaced nodes on `[from, to]`, both ends included.
    pub fn linspace(from: f64, to: f64, points: usize) -> Result<Self> {
        if points < 3 {
            return Err(Error::TooFewPoints { min: 3, got: points });
        }
        let step = (to - from) / (points - 1) as f64;
        let mut omegas: Vec<f64> = (0..points).map(|i| from + step * i as f64).collect();
        omegas[points - 1] = to;
        Self::new(omegas)
    }

    /// Cell midpoints `(k + ½)·to/points`, `k = 0..points`.
    ///
    /// Mirroring such a grid about the origin gives a uniform grid that
    /// straddles `ω = 0` without sampling it.
    pub fn half_offset(to: f64, points: usize) -> Result<Self> {
        if !(to > 0.0) {
            return Err(Error::InvalidParameter(format!("upper frequency must be positive, got {to}")));
        }
        let step = to / points as f64;
        Self::new((0..points).map(|k| (k as f64 + 0.5) * step).collect())
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    /// Mean spacing; the exact spacing when the grid is uniform.
    pub fn step(&self) -> f64 {
        (self.last() - self.first()) / (self.len() - 1) as f64
    }

    pub fn first(&self) -> f64 {
        self.omegas[0]
    }

    pub fn last(&self) -> f64 {
        self.omegas[self.omegas.len() - 1]
    }

    pub(crate) fn require_uniform(&self) -> Result<f64> {
        if self.uniform {
            Ok(self.step())
        } else {
            Err(Error::NonUniformGrid)
        }
    }

    pub(crate) fn check_len(&self, got: usize) -> Result<()> {
        if got == self.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.len(), got })
        }
    }
}

/// Complex samples of a response function on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum {
    grid: FrequencyGrid,
    values: Vec<Complex64>,
}

impl ComplexSpectrum {
    pub fn new(grid: FrequencyGrid, values: Vec<Complex64>) -> Result<Self> {
        grid.check_len(values.len())?;
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` on every node of `grid`.
    pub fn sample<F>(grid: FrequencyGrid, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        let values = grid.omegas().iter().map(|&w| f(w)).collect();
        Self::new(grid, values)
    }

    /// Like [`ComplexSpectrum::sample`] for fallible evaluators.
    pub fn try_sample<F>(grid: FrequencyGrid, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<Complex64>,
    {
        let values = grid.omegas().iter().map(|&w| f(w)).collect::<Result<Vec<_>>>()?;
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn omegas(&self) -> &[f64] {
        self.grid.omegas()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c · S` for a complex constant.
    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

/// Delay time `tau1` and formation time `tau2` on a grid.
///
/// `edge_nodes` counts how many nodes at each end were produced by
/// one-sided stencils; zero for closed-form spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalSpectrum {
    grid: FrequencyGrid,
    tau1: Vec<f64>,
    tau2: Vec<f64>,
    edge_nodes: usize,
}

impl TemporalSpectrum {
    pub fn new(grid: FrequencyGrid, tau1: Vec<f64>, tau2: Vec<f64>) -> Result<Self> {
        grid.check_len(tau1.len())?;
        grid.check_len(tau2.len())?;
        if let Some(index) = tau1.iter().zip(&tau2).position(|(a, b)| !a.is_finite() || !b.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { grid, tau1, tau2, edge_nodes: 0 })
    }

    /// Builds from the complex combination `tau1 + i tau2`.
    pub fn from_complex(grid: FrequencyGrid, tau: &[Complex64]) -> Result<Self> {
        let tau1 = tau.iter().map(|t| t.re).collect();
        let tau2 = tau.iter().map(|t| t.im).collect();
        Self::new(grid, tau1, tau2)
    }

    pub(crate) fn with_edge_nodes(mut self, edge_nodes: usize) -> Self {
        self.edge_nodes = edge_nodes;
        self
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn omegas(&self) -> &[f64] {
        self.grid.omegas()
    }

    pub fn tau1(&self) -> &[f64] {
        &self.tau1
    }

    pub fn tau2(&self) -> &[f64] {
        &self.tau2
    }

    pub fn edge_nodes(&self) -> usize {
        self.edge_nodes
    }

    pub fn len(&self) -> usize {
        self.tau1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau1.is_empty()
    }

    /// `tau1 + i tau2` per node.
    pub fn complex(&self) -> Vec<Complex64> {
        self.tau1
            .iter()
            .zip(&self.tau2)
            .map(|(&a, &b)| Complex64::new(a, b))
            .collect()
    }

    /// Index range of nodes computed with centered stencils.
    pub fn interior(&self) -> std::ops::Range<usize> {
        self.edge_nodes..self.len() - self.edge_nodes
    }
}
