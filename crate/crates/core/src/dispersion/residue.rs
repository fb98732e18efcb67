//! Time-domain forms of the temporal function of a pole-zero model.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::model::PoleZeroModel;
use crate::spectrum::TemporalSpectrum;

fn sign(t: f64) -> f64 {
    if t > 0.0 {
        1.0
    } else if t < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Damped-oscillator series `τ₁(t) = -Σ cos(ω_n t)·e^{-γ_n|t|}`,
/// `τ₂(t) = -i·sgn(t)·τ₁(t)`, with `sgn(0) = 0`.
pub fn residue_time_domain(model: &PoleZeroModel, t: f64) -> (f64, Complex64) {
    let tau1 = -model
        .resonances()
        .iter()
        .map(|r| (r.omega * t).cos() * (-r.gamma * t.abs()).exp())
        .sum::<f64>();
    (tau1, Complex64::new(0.0, -sign(t) * tau1))
}

/// Exact image `(1/2π)∫ e^{-iωt} τ(ω) dω` of the model's temporal function:
/// `Σ e^{-iω_n t - γ_n|t|/2}` from the resonances and `(p/2)·sgn(t)` from
/// the `ω^{-p}` prefactor.
pub fn resonance_time_transform(model: &PoleZeroModel, t: f64) -> Complex64 {
    let series: Complex64 = model
        .resonances()
        .iter()
        .map(|r| Complex64::from_polar((-0.5 * r.gamma * t.abs()).exp(), -r.omega * t))
        .sum();
    series + 0.5 * model.power() as f64 * sign(t)
}

/// Trapezoid images `(1/2π)∫ e^{-iωt} τ_j(ω) dω` of `τ₁` and `τ₂` over the
/// sampled window.
pub fn time_transform(tau: &TemporalSpectrum, t: f64) -> (Complex64, Complex64) {
    let x = tau.omegas();
    let n = x.len();
    let (mut a, mut b) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for j in 0..n {
        let h = match j {
            0 => 0.5 * (x[1] - x[0]),
            j if j == n - 1 => 0.5 * (x[n - 1] - x[n - 2]),
            j => 0.5 * (x[j + 1] - x[j - 1]),
        };
        let kernel = Complex64::from_polar(h / (2.0 * PI), -x[j] * t);
        a += kernel * tau.tau1()[j];
        b += kernel * tau.tau2()[j];
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::FrequencyGrid;
    use approx::assert_abs_diff_eq;

    #[test]
    fn unit_amplitudes_at_origin() {
        let one = PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap();
        assert_eq!(residue_time_domain(&one, 0.0), (-1.0, Complex64::new(0.0, 0.0)));
        let three = PoleZeroModel::blaschke(&[(1.0, 0.2), (2.0, 0.1), (4.0, 0.5)]).unwrap();
        assert_eq!(residue_time_domain(&three, 0.0).0, -3.0);
    }

    #[test]
    fn scalar_value_at_pi() {
        let one = PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap();
        assert_abs_diff_eq!(residue_time_domain(&one, PI).0, (-0.2 * PI).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(residue_time_domain(&one, PI).0, 0.533_488_091_091_103, epsilon = 1e-12);
    }

    #[test]
    fn parity() {
        let m = PoleZeroModel::blaschke(&[(1.0, 0.2), (2.5, 0.3)]).unwrap();
        for t in [0.3, 1.0, 7.2] {
            let (a1, a2) = residue_time_domain(&m, t);
            let (b1, b2) = residue_time_domain(&m, -t);
            assert_eq!(a1, b1);
            assert_eq!(a2, -b2);
        }
    }

    #[test]
    fn numerical_transform_matches_exact_image() {
        let m = PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap();
        let g = FrequencyGrid::linspace(-400.0, 400.0, 80001).unwrap();
        let tau1: Vec<f64> = g.omegas().iter().map(|&w| m.tau(w).unwrap().re).collect();
        let tau = TemporalSpectrum::new(g.clone(), tau1, vec![0.0; g.len()]).unwrap();
        for t in [0.0, 0.5, 2.0, 5.0] {
            let (num, _) = time_transform(&tau, t);
            let exact = resonance_time_transform(&m, t);
            assert!((num - exact).norm() < 2e-3, "t={t}: {num} vs {exact}");
        }
    }
}
