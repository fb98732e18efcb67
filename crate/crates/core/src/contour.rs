use num_complex::Complex64;

use crate::error::{Error, Result};

/// Closed polyline in the complex frequency plane.
///
/// The first vertex is repeated as the last. Self-intersecting polylines are
/// accepted but the winding count is then only meaningful per enclosed
/// region; keeping the contour simple is up to the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct Contour {
    vertices: Vec<Complex64>,
}

impl Contour {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::InvalidContour(format!(
                "need at least 4 vertices (closed), got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidContour("non-finite vertex".into()));
        }
        if vertices[0] != vertices[vertices.len() - 1] {
            return Err(Error::InvalidContour("first and last vertex differ".into()));
        }
        Ok(Self { vertices })
    }

    /// Counterclockwise rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x1 > x0 && y1 > y0) {
            return Err(Error::InvalidContour(format!(
                "degenerate rectangle [{x0}, {x1}] x [{y0}, {y1}]"
            )));
        }
        Self::new(vec![
            Complex64::new(x0, y0),
            Complex64::new(x1, y0),
            Complex64::new(x1, y1),
            Complex64::new(x0, y1),
            Complex64::new(x0, y0),
        ])
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Shoelace signed area; positive means counterclockwise.
    pub fn signed_area(&self) -> f64 {
        0.5 * self
            .edges()
            .map(|(a, b)| a.re * b.im - b.re * a.im)
            .sum::<f64>()
    }

    pub fn is_counterclockwise(&self) -> bool {
        self.signed_area() > 0.0
    }

    /// Same path traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// Mirror image in the real axis, orientation restored to match `self`.
    pub fn conjugate(&self) -> Self {
        let mirrored = Self { vertices: self.vertices.iter().map(|v| v.conj()).collect() };
        mirrored.reversed()
    }

    /// Smallest distance from `z` to the polyline.
    pub fn distance_to(&self, z: Complex64) -> f64 {
        self.edges()
            .map(|(a, b)| {
                let ab = b - a;
                let len2 = ab.norm_sqr();
                let s = if len2 == 0.0 {
                    0.0
                } else {
                    (((z - a) * ab.conj()).re / len2).clamp(0.0, 1.0)
                };
                (z - (a + ab * s)).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }
}
