//! Contour integral of the temporal function of a pole-zero model.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::contour::Contour;
use crate::error::{Error, Result};
use crate::model::PoleZeroModel;
use crate::numeric::GAUSS_LEGENDRE_8;

/// Closest approach of a contour to a zero or pole.
pub const CONTOUR_CLEARANCE: f64 = 1e-6;
pub const MIN_SAMPLES_PER_EDGE: usize = 16;

/// `(1/2π)∮ τ(ω) dω` with `τ = -i d ln S/dω`, which counts enclosed zeros
/// minus poles (counterclockwise).
///
/// Every edge is split into `samples_per_edge` pieces, each integrated with
/// 8-point Gauss-Legendre.
pub fn winding_number(model: &PoleZeroModel, contour: &Contour, samples_per_edge: usize) -> Result<f64> {
    if samples_per_edge < MIN_SAMPLES_PER_EDGE {
        return Err(Error::InvalidParameter(format!(
            "samples_per_edge must be at least {MIN_SAMPLES_PER_EDGE}, got {samples_per_edge}"
        )));
    }
    let distance = model
        .zeros()
        .chain(model.poles())
        .map(|z| contour.distance_to(z))
        .fold(f64::INFINITY, f64::min);
    if distance < CONTOUR_CLEARANCE {
        return Err(Error::SingularityOnContour { distance });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for (a, b) in contour.edges() {
        let piece = (b - a) / samples_per_edge as f64;
        for s in 0..samples_per_edge {
            let mid = a + piece * (s as f64 + 0.5);
            for &(node, weight) in &GAUSS_LEGENDRE_8 {
                let z = mid + piece * (0.5 * node);
                total += model.log_derivative_tau(z)? * piece * (0.5 * weight);
            }
        }
    }
    Ok(total.re / (2.0 * PI))
}
