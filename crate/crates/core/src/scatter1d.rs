//! Transmission through piecewise-constant potentials in one dimension.
//!
//! Units `ħ = 1`, `2m = 1`, so a region of height `V` has wavenumber
//! `√(E - V)`. Both leads are at zero potential; amplitudes in the right lead
//! are referenced to the right edge of the profile, so free propagation over
//! length `L` gives `t = e^{i√E·L}`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Energies this close to a segment height are rejected.
pub const DEGENERATE_ENERGY_TOL: f64 = 1e-12;
/// Evanescent propagation beyond this `κa` is factored as `e^{κa}` times a bounded matrix.
pub const LOG_SCALING_THRESHOLD: f64 = 30.0;
/// Smallest `|t|` accepted by [`formation_time`].
pub const MIN_TRANSMISSION: f64 = 1e-12;
/// Coarse scan resolution per search window in [`find_resonances`].
pub const RESONANCE_SCAN_POINTS: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub width: f64,
    pub height: f64,
}

/// Ordered segments between two field-free leads.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PotentialProfile {
    segments: Vec<Segment>,
}

impl PotentialProfile {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        for (i, s) in segments.iter().enumerate() {
            if !(s.width > 0.0 && s.width.is_finite()) || !s.height.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "segment {i} needs finite width > 0 and finite height, got ({}, {})",
                    s.width, s.height
                )));
            }
        }
        Ok(Self { segments })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Single rectangular segment.
    pub fn barrier(width: f64, height: f64) -> Result<Self> {
        Self::new(vec![Segment { width, height }])
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn total_width(&self) -> f64 {
        self.segments.iter().map(|s| s.width).sum()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut segments = self.segments.clone();
        segments.extend_from_slice(&other.segments);
        Self { segments }
    }
}

type Real2 = [[f64; 2]; 2];
type Complex2 = [[Complex64; 2]; 2];

fn mul_real(a: &Real2, b: &Real2) -> Real2 {
    let mut c = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn mul_complex(a: &Complex2, b: &Complex2) -> Complex2 {
    let mut c = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// `(ψ, ψ')` propagator across one segment, as `e^{scale}·matrix`.
fn segment_matrix(segment: &Segment, energy: f64) -> (Real2, f64) {
    let a = segment.width;
    let excess = energy - segment.height;
    if excess > 0.0 {
        let q = excess.sqrt();
        let (s, c) = (q * a).sin_cos();
        ([[c, s / q], [-q * s, c]], 0.0)
    } else {
        let kappa = (-excess).sqrt();
        let x = kappa * a;
        if x <= LOG_SCALING_THRESHOLD {
            let (s, c) = (x.sinh(), x.cosh());
            ([[c, s / kappa], [kappa * s, c]], 0.0)
        } else {
            let e = (-2.0 * x).exp();
            let (c, s) = (0.5 * (1.0 + e), 0.5 * (1.0 - e));
            ([[c, s / kappa], [kappa * s, c]], x)
        }
    }
}

/// Lead-amplitude transfer matrix, stored as `e^{log_scale}·scaled` so thick
/// barriers neither overflow nor lose precision.
///
/// Columns act on (right-moving, left-moving) amplitudes in the left lead and
/// return them in the right lead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    scaled: Complex2,
    log_scale: f64,
}

impl TransferMatrix {
    pub fn identity() -> Self {
        let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        Self { scaled: [[one, zero], [zero, one]], log_scale: 0.0 }
    }

    pub fn scaled(&self) -> &Complex2 {
        &self.scaled
    }

    pub fn log_scale(&self) -> f64 {
        self.log_scale
    }

    /// The plain matrix; entries overflow for extremely opaque profiles.
    pub fn matrix(&self) -> Complex2 {
        let f = self.log_scale.exp();
        self.scaled.map(|row| row.map(|v| v * f))
    }

    pub fn determinant(&self) -> Complex64 {
        let m = &self.scaled;
        (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * (2.0 * self.log_scale).exp()
    }

    /// Transfer matrix of `self`'s profile followed by `next`'s.
    pub fn then(&self, next: &Self) -> Self {
        let product = mul_complex(&next.scaled, &self.scaled);
        normalized(product, self.log_scale + next.log_scale)
    }
}

fn normalized(m: Complex2, log_scale: f64) -> TransferMatrix {
    let peak = m.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    if peak > 0.0 && peak.is_finite() {
        TransferMatrix { scaled: m.map(|row| row.map(|v| v / peak)), log_scale: log_scale + peak.ln() }
    } else {
        TransferMatrix { scaled: m, log_scale }
    }
}

fn check_energy(profile: &PotentialProfile, energy: f64) -> Result<()> {
    if !(energy > 0.0) {
        return Err(Error::NonPositiveEnergy(energy));
    }
    if profile.segments.iter().any(|s| (energy - s.height).abs() < DEGENERATE_ENERGY_TOL) {
        return Err(Error::DegenerateEnergy { energy });
    }
    Ok(())
}

/// Product of the segment propagators, left to right, expressed between the
/// plane-wave amplitudes of the two leads.
pub fn transfer_matrix(profile: &PotentialProfile, energy: f64) -> Result<TransferMatrix> {
    check_energy(profile, energy)?;
    let mut m: Real2 = [[1.0, 0.0], [0.0, 1.0]];
    let mut log_scale = 0.0;
    for segment in &profile.segments {
        let (s, extra) = segment_matrix(segment, energy);
        m = mul_real(&s, &m);
        let peak = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
        m = m.map(|row| row.map(|v| v / peak));
        log_scale += extra + peak.ln();
    }
    // T = P⁻¹ M P with P = [[1, 1], [ik, -ik]]
    let k = energy.sqrt();
    let ik = Complex64::new(0.0, k);
    let c = |v: f64| Complex64::new(v, 0.0);
    let p = [[c(1.0), c(1.0)], [ik, -ik]];
    let p_inv = [[c(0.5), 0.5 / ik], [c(0.5), -0.5 / ik]];
    let mc = m.map(|row| row.map(c));
    Ok(TransferMatrix { scaled: mul_complex(&p_inv, &mul_complex(&mc, &p)), log_scale })
}

/// Reflection and transmission amplitudes at one energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix1D {
    pub r: Complex64,
    pub t: Complex64,
    pub r_prime: Complex64,
    pub t_prime: Complex64,
    /// `ln|t|`, finite even when `t` underflows.
    pub log_abs_t: f64,
}

impl ScatteringMatrix1D {
    pub fn from_transfer(m: &TransferMatrix) -> Self {
        let s = &m.scaled;
        let d = s[1][1];
        let t = Complex64::from_polar((-m.log_scale).exp(), 0.0) / d;
        Self {
            r: -s[1][0] / d,
            t,
            r_prime: s[0][1] / d,
            t_prime: t,
            log_abs_t: -m.log_scale - d.norm().ln(),
        }
    }

    pub fn transmission(&self) -> f64 {
        self.t.norm_sqr()
    }

    pub fn reflection(&self) -> f64 {
        self.r.norm_sqr()
    }

    /// `max(||r|² + |t|² - 1|, ||r'|² + |t'|² - 1|)`.
    pub fn unitarity_defect(&self) -> f64 {
        let left = (self.r.norm_sqr() + self.t.norm_sqr() - 1.0).abs();
        let right = (self.r_prime.norm_sqr() + self.t_prime.norm_sqr() - 1.0).abs();
        left.max(right)
    }
}

pub fn s_matrix(profile: &PotentialProfile, energy: f64) -> Result<ScatteringMatrix1D> {
    Ok(ScatteringMatrix1D::from_transfer(&transfer_matrix(profile, energy)?))
}

fn check_step(energy: f64, h: f64) -> Result<()> {
    if !(h > 0.0) || !(energy - h > 0.0) {
        return Err(Error::InvalidParameter(format!("step {h} invalid at energy {energy}")));
    }
    Ok(())
}

/// Phase delay `d arg t/dE` by central difference.
pub fn wigner_delay(profile: &PotentialProfile, energy: f64, h: f64) -> Result<f64> {
    check_step(energy, h)?;
    let up = s_matrix(profile, energy + h)?;
    let down = s_matrix(profile, energy - h)?;
    // ratio of phases only; moduli may be tiny
    let ratio = (up.t / up.t.norm()) * (down.t / down.t.norm()).conj();
    Ok(ratio.arg() / (2.0 * h))
}

/// Formation time `-d ln|t|/dE` by central difference.
pub fn formation_time(profile: &PotentialProfile, energy: f64, h: f64) -> Result<f64> {
    check_step(energy, h)?;
    let mut logs = [0.0; 3];
    for (slot, e) in logs.iter_mut().zip([energy - h, energy, energy + h]) {
        let s = s_matrix(profile, e)?;
        if s.log_abs_t < MIN_TRANSMISSION.ln() {
            return Err(Error::ZeroTransmission { energy: e });
        }
        *slot = s.log_abs_t;
    }
    Ok(-(logs[2] - logs[0]) / (2.0 * h))
}

fn transmission_at(profile: &PotentialProfile, energy: f64) -> f64 {
    s_matrix(profile, energy).map(|s| s.transmission()).unwrap_or(0.0)
}

/// Local maxima of `|t|²` on `(from, to)`.
///
/// A coarse scan of [`RESONANCE_SCAN_POINTS`] nodes brackets each maximum,
/// golden-section search narrows it, and bisection on the sign of the
/// `ln|t|` slope pins the energy where the slope vanishes.
pub fn find_resonances(profile: &PotentialProfile, from: f64, to: f64) -> Result<Vec<f64>> {
    if !(from > 0.0) || !(to > from) {
        return Err(Error::InvalidParameter(format!("resonance window ({from}, {to}) invalid")));
    }
    let n = RESONANCE_SCAN_POINTS;
    let step = (to - from) / (n - 1) as f64;
    let energies: Vec<f64> = (0..n).map(|i| from + step * i as f64).collect();
    let values: Vec<f64> = energies.iter().map(|&e| transmission_at(profile, e)).collect();
    let mut found = Vec::new();
    for i in 1..n - 1 {
        if values[i] > values[i - 1] && values[i] >= values[i + 1] {
            let e = golden_maximum(|e| transmission_at(profile, e), energies[i - 1], energies[i + 1]);
            found.push(polish_maximum(profile, e, step));
        }
    }
    Ok(found)
}

fn golden_maximum(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= 1e-13 * (a.abs() + b.abs()) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Bisection on the sign of `ln|t(e+δ)| - ln|t(e-δ)|` around a maximum.
fn polish_maximum(profile: &PotentialProfile, guess: f64, scale: f64) -> f64 {
    let slope = |e: f64| {
        let delta = 1e-7 * scale;
        match (s_matrix(profile, e + delta), s_matrix(profile, e - delta)) {
            (Ok(a), Ok(b)) => a.log_abs_t - b.log_abs_t,
            _ => 0.0,
        }
    };
    let Some((mut lo, mut hi)) = [1e-3, 1e-1, 1.0]
        .iter()
        .map(|f| (guess - f * scale, guess + f * scale))
        .find(|&(lo, hi)| slope(lo) > 0.0 && slope(hi) < 0.0)
    else {
        return guess;
    };
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if slope(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
