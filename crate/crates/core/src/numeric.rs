//! Finite differences, phase unwrapping and quadrature rules shared by the
//! extraction and dispersion code.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Finite-difference accuracy order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StencilOrder {
    #[default]
    Second,
    Fourth,
}

impl StencilOrder {
    pub fn from_order(order: u32) -> Option<Self> {
        match order {
            2 => Some(Self::Second),
            4 => Some(Self::Fourth),
            _ => None,
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Self::Second => 2,
            Self::Fourth => 4,
        }
    }

    /// Nodes at each end that fall back to one-sided stencils.
    pub fn edge_nodes(self) -> usize {
        match self {
            Self::Second => 1,
            Self::Fourth => 2,
        }
    }
}

/// First derivative of `f` sampled at `x`.
///
/// Second order works on any increasing grid; fourth order needs uniform
/// spacing `h` and at least 5 nodes.
pub fn derivative(x: &[f64], f: &[f64], order: StencilOrder, uniform_step: Option<f64>) -> Result<Vec<f64>> {
    let n = f.len();
    match order {
        StencilOrder::Second => Ok(derivative2(x, f)),
        StencilOrder::Fourth => {
            let h = uniform_step.ok_or(Error::NonUniformGrid)?;
            if n < 5 {
                return Err(Error::TooFewPoints { min: 5, got: n });
            }
            Ok(derivative4(h, f))
        }
    }
}

fn derivative2(x: &[f64], f: &[f64]) -> Vec<f64> {
    let n = f.len();
    let mut d = vec![0.0; n];
    // three-point Lagrange derivative, valid for uneven spacing
    let lagrange = |i0: usize, at: usize| {
        let (x0, x1, x2) = (x[i0], x[i0 + 1], x[i0 + 2]);
        let (f0, f1, f2) = (f[i0], f[i0 + 1], f[i0 + 2]);
        let t = x[at];
        f0 * (2.0 * t - x1 - x2) / ((x0 - x1) * (x0 - x2))
            + f1 * (2.0 * t - x0 - x2) / ((x1 - x0) * (x1 - x2))
            + f2 * (2.0 * t - x0 - x1) / ((x2 - x0) * (x2 - x1))
    };
    d[0] = lagrange(0, 0);
    for (i, di) in d.iter_mut().enumerate().take(n - 1).skip(1) {
        *di = lagrange(i - 1, i);
    }
    d[n - 1] = lagrange(n - 3, n - 1);
    d
}

fn derivative4(h: f64, f: &[f64]) -> Vec<f64> {
    let n = f.len();
    let s = 1.0 / (12.0 * h);
    let mut d = vec![0.0; n];
    d[0] = s * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = s * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for i in 2..n - 2 {
        d[i] = s * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    }
    d[n - 2] = s * (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]);
    d[n - 1] = s * (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]);
    d
}

/// Second derivative of `f` sampled at `x`.
pub fn second_derivative(x: &[f64], f: &[f64], order: StencilOrder, uniform_step: Option<f64>) -> Result<Vec<f64>> {
    let n = f.len();
    match (order, uniform_step) {
        (StencilOrder::Second, Some(h)) => {
            if n < 4 {
                return Err(Error::TooFewPoints { min: 4, got: n });
            }
            let s = 1.0 / (h * h);
            let mut d = vec![0.0; n];
            d[0] = s * (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]);
            for i in 1..n - 1 {
                d[i] = s * (f[i - 1] - 2.0 * f[i] + f[i + 1]);
            }
            d[n - 1] = s * (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]);
            Ok(d)
        }
        (StencilOrder::Second, None) => {
            // uneven three-point formula; first order in the spacing ratio
            let mut d = vec![0.0; n];
            let three = |i: usize| {
                let (hm, hp) = (x[i] - x[i - 1], x[i + 1] - x[i]);
                2.0 * ((f[i + 1] - f[i]) / hp - (f[i] - f[i - 1]) / hm) / (hp + hm)
            };
            for (i, di) in d.iter_mut().enumerate().take(n - 1).skip(1) {
                *di = three(i);
            }
            d[0] = d[1];
            d[n - 1] = d[n - 2];
            Ok(d)
        }
        (StencilOrder::Fourth, Some(h)) => {
            if n < 6 {
                return Err(Error::TooFewPoints { min: 6, got: n });
            }
            let s = 1.0 / (12.0 * h * h);
            let mut d = vec![0.0; n];
            d[0] = s * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]);
            d[1] = s * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]);
            for i in 2..n - 2 {
                d[i] = s * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
            }
            d[n - 2] = s * (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]);
            d[n - 1] = s
                * (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5]
                    - 10.0 * f[n - 6]);
            Ok(d)
        }
        (StencilOrder::Fourth, None) => Err(Error::NonUniformGrid),
    }
}

/// Cumulative nearest-branch unwrapping of `arg(values)`.
///
/// Returns the unwrapped phase; fails with [`Error::PhaseJump`] if any
/// remaining step exceeds `tolerance` in magnitude.
pub fn unwrap_phase(values: &[Complex64], tolerance: f64) -> Result<Vec<f64>> {
    let mut phase = Vec::with_capacity(values.len());
    let Some(first) = values.first() else {
        return Ok(phase);
    };
    let mut current = first.arg();
    phase.push(current);
    for (index, pair) in values.windows(2).enumerate() {
        let raw = pair[1].arg() - pair[0].arg();
        let step = raw - TAU * ((raw + PI) / TAU).floor();
        // floor maps +π to -π; keep the principal interval (-π, π]
        let step = if step == -PI { PI } else { step };
        if step.abs() > tolerance {
            return Err(Error::PhaseJump { index, step });
        }
        current += step;
        phase.push(current);
    }
    Ok(phase)
}

/// Cumulative trapezoid with the Euler-Maclaurin end correction applied
/// per cell: `∫ ≈ h(f₀+f₁)/2 - h²(f₁'-f₀')/12`.
///
/// `df` are derivative estimates at the nodes. The correction lifts the rule
/// to fourth order without resampling the grid.
pub fn cumulative_trapezoid_corrected<T>(x: &[f64], f: &[T], df: &[T]) -> Vec<T>
where
    T: Copy + Default + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<f64, Output = T>,
{
    let mut out = Vec::with_capacity(f.len());
    let mut acc = T::default();
    out.push(acc);
    for i in 1..f.len() {
        let h = x[i] - x[i - 1];
        acc = acc + (f[i] + f[i - 1]) * (0.5 * h) - (df[i] - df[i - 1]) * (h * h / 12.0);
        out.push(acc);
    }
    out
}

/// Composite trapezoid over the whole grid.
pub fn trapezoid<T>(x: &[f64], f: &[T]) -> T
where
    T: Copy + Default + std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T>,
{
    x.windows(2)
        .zip(f.windows(2))
        .fold(T::default(), |acc, (xs, fs)| acc + (fs[0] + fs[1]) * (0.5 * (xs[1] - xs[0])))
}

/// 8-point Gauss-Legendre nodes and weights on `[-1, 1]`.
pub const GAUSS_LEGENDRE_8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_3, 0.101_228_536_290_376_26),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (-0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_26),
];
