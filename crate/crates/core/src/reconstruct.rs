//! Rebuilding a spectrum from its temporal functions, and continuing
//! temporal functions to negative frequency.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{cumulative_trapezoid_corrected, derivative, StencilOrder};
use crate::spectrum::{ComplexSpectrum, FrequencyGrid, TemporalSpectrum};

/// Integrates `d ln S/dω = iτ₁ - τ₂` from the anchor point.
///
/// The result satisfies `S(anchor_omega) = anchor_value`; the anchor need
/// not be a grid node. Cells are integrated with the end-corrected
/// trapezoid so the reconstruction stays fourth order on the caller's grid.
pub fn reconstruct_spectrum(tau: &TemporalSpectrum, anchor_omega: f64, anchor_value: Complex64) -> Result<ComplexSpectrum> {
    let grid = tau.grid();
    let (lo, hi) = (grid.first(), grid.last());
    if !(anchor_omega >= lo && anchor_omega <= hi) {
        return Err(Error::AnchorOutOfRange { anchor: anchor_omega, lo, hi });
    }
    if anchor_value.norm() == 0.0 || !anchor_value.is_finite() {
        return Err(Error::ZeroAnchor);
    }
    let x = grid.omegas();
    let rate: Vec<Complex64> = tau.complex().iter().map(|t| Complex64::i() * t).collect();
    let d_re = derivative(x, &rate.iter().map(|r| r.re).collect::<Vec<_>>(), StencilOrder::Second, None)?;
    let d_im = derivative(x, &rate.iter().map(|r| r.im).collect::<Vec<_>>(), StencilOrder::Second, None)?;
    let d_rate: Vec<Complex64> = d_re.into_iter().zip(d_im).map(|(a, b)| Complex64::new(a, b)).collect();
    let log = cumulative_trapezoid_corrected(x, &rate, &d_rate);

    // log S at the anchor, by the same corrected rule on the partial cell
    let j = match x.binary_search_by(|w| w.total_cmp(&anchor_omega)) {
        Ok(j) => j,
        Err(j) => j - 1,
    };
    let anchor_log = if j + 1 == x.len() || x[j] == anchor_omega {
        log[j]
    } else {
        let h = x[j + 1] - x[j];
        let s = (anchor_omega - x[j]) / h;
        let at = rate[j] * (1.0 - s) + rate[j + 1] * s;
        let d_at = d_rate[j] * (1.0 - s) + d_rate[j + 1] * s;
        let dx = anchor_omega - x[j];
        log[j] + (rate[j] + at) * (0.5 * dx) - (d_at - d_rate[j]) * (dx * dx / 12.0)
    };

    let values = log.iter().map(|l| anchor_value * (l - anchor_log).exp()).collect();
    ComplexSpectrum::new(grid.clone(), values)
}

/// Continues `τ` to negative frequency with `τ(-ω) = τ*(ω)`.
///
/// The output grid is the mirror image of the input followed by the input
/// itself, so `τ₁` comes out even and `τ₂` odd.
pub fn extend_negative_frequencies(tau: &TemporalSpectrum) -> Result<TemporalSpectrum> {
    let x = tau.omegas();
    if let Some(index) = x.iter().position(|&w| w <= 0.0) {
        return Err(Error::NonPositiveGrid { index, omega: x[index] });
    }
    let n = x.len();
    let mut omegas = Vec::with_capacity(2 * n);
    let mut tau1 = Vec::with_capacity(2 * n);
    let mut tau2 = Vec::with_capacity(2 * n);
    for i in (0..n).rev() {
        omegas.push(-x[i]);
        tau1.push(tau.tau1()[i]);
        tau2.push(-tau.tau2()[i]);
    }
    omegas.extend_from_slice(x);
    tau1.extend_from_slice(tau.tau1());
    tau2.extend_from_slice(tau.tau2());
    Ok(TemporalSpectrum::new(FrequencyGrid::new(omegas)?, tau1, tau2)?.with_edge_nodes(tau.edge_nodes()))
}

/// Nodes with `ω > 0`, the inverse of [`extend_negative_frequencies`].
pub fn positive_part(tau: &TemporalSpectrum) -> Result<TemporalSpectrum> {
    let start = tau.omegas().iter().position(|&w| w > 0.0).unwrap_or(tau.len());
    let grid = FrequencyGrid::new(tau.omegas()[start..].to_vec())?;
    Ok(TemporalSpectrum::new(grid, tau.tau1()[start..].to_vec(), tau.tau2()[start..].to_vec())?
        .with_edge_nodes(tau.edge_nodes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PoleZeroModel;
    use crate::physics::oscillator::{oscillator_tau, OscillatorParams};
    use proptest::prelude::*;

    fn model_tau_spectrum(model: &PoleZeroModel, grid: FrequencyGrid) -> TemporalSpectrum {
        let tau: Vec<Complex64> = grid.omegas().iter().map(|&w| model.tau(w).unwrap()).collect();
        TemporalSpectrum::from_complex(grid, &tau).unwrap()
    }

    #[test]
    fn zero_tau_gives_constant_spectrum() {
        let g = FrequencyGrid::linspace(0.0, 3.0, 31).unwrap();
        let tau = TemporalSpectrum::new(g, vec![0.0; 31], vec![0.0; 31]).unwrap();
        let s = reconstruct_spectrum(&tau, 1.0, Complex64::new(1.0, 0.0)).unwrap();
        assert!(s.values().iter().all(|v| *v == Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn blaschke_round_trip_against_model() {
        let m = PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap();
        let g = FrequencyGrid::linspace(0.0, 2.0, 4001).unwrap();
        let tau = model_tau_spectrum(&m, g);
        let s = reconstruct_spectrum(&tau, 0.0, m.evaluate_real(0.0).unwrap()).unwrap();
        let err = s
            .omegas()
            .iter()
            .zip(s.values())
            .map(|(&w, v)| (v - m.evaluate_real(w).unwrap()).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-6, "max error {err}");
    }

    #[test]
    fn inverse_power_modulus() {
        // τ₂ = 1/ω integrates to |S| = 1/ω
        let g = FrequencyGrid::linspace(1.0, 10.0, 4001).unwrap();
        let tau2: Vec<f64> = g.omegas().iter().map(|w| 1.0 / w).collect();
        let tau = TemporalSpectrum::new(g, vec![0.0; 4001], tau2).unwrap();
        let s = reconstruct_spectrum(&tau, 1.0, Complex64::new(1.0, 0.0)).unwrap();
        let err = s
            .omegas()
            .iter()
            .zip(s.values())
            .map(|(&w, v)| (v.norm() - 1.0 / w).abs() * w)
            .fold(0.0, f64::max);
        assert!(err < 1e-6, "max rel error {err}");
    }

    #[test]
    fn off_node_anchor_is_honoured() {
        let m = PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap();
        let g = FrequencyGrid::linspace(0.0, 2.0, 2001).unwrap();
        let tau = model_tau_spectrum(&m, g);
        let anchor = 0.73215;
        let s = reconstruct_spectrum(&tau, anchor, m.evaluate_real(anchor).unwrap()).unwrap();
        let err = s
            .omegas()
            .iter()
            .zip(s.values())
            .map(|(&w, v)| (v - m.evaluate_real(w).unwrap()).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-5, "max error {err}");
    }

    #[test]
    fn anchor_checks() {
        let g = FrequencyGrid::linspace(0.0, 1.0, 5).unwrap();
        let tau = TemporalSpectrum::new(g, vec![0.0; 5], vec![0.0; 5]).unwrap();
        assert!(matches!(
            reconstruct_spectrum(&tau, 1.5, Complex64::new(1.0, 0.0)),
            Err(Error::AnchorOutOfRange { .. })
        ));
        assert_eq!(reconstruct_spectrum(&tau, 0.5, Complex64::new(0.0, 0.0)), Err(Error::ZeroAnchor));
    }

    #[test]
    fn mirror_conjugates() {
        let g = FrequencyGrid::new(vec![1.0, 2.0, 3.0]).unwrap();
        let tau = TemporalSpectrum::new(g, vec![5.0, 1.0, 0.5], vec![2.0, 0.0, 0.0]).unwrap();
        let ext = extend_negative_frequencies(&tau).unwrap();
        assert_eq!(ext.omegas(), &[-3.0, -2.0, -1.0, 1.0, 2.0, 3.0]);
        assert_eq!(ext.tau1()[2], 5.0);
        assert_eq!(ext.tau2()[2], -2.0);
    }

    #[test]
    fn mirror_of_even_input_has_no_odd_part() {
        let g = FrequencyGrid::linspace(0.5, 4.0, 8).unwrap();
        let tau1: Vec<f64> = g.omegas().iter().map(|w| w.sin()).collect();
        let tau = TemporalSpectrum::new(g, tau1, vec![0.0; 8]).unwrap();
        let ext = extend_negative_frequencies(&tau).unwrap();
        assert!(ext.tau2().iter().all(|&t| t == 0.0));
        for i in 0..8 {
            assert_eq!(ext.tau1()[i], ext.tau1()[15 - i]);
        }
    }

    #[test]
    fn rejects_nonpositive_grid() {
        let g = FrequencyGrid::linspace(0.0, 1.0, 5).unwrap();
        let tau = TemporalSpectrum::new(g, vec![0.0; 5], vec![0.0; 5]).unwrap();
        assert!(matches!(extend_negative_frequencies(&tau), Err(Error::NonPositiveGrid { index: 0, .. })));
    }

    #[test]
    fn mirrored_oscillator_matches_two_term_form() {
        // The two-resonance form is its own conjugate continuation, so the
        // mirrored samples must agree with direct evaluation at -ω.
        let p = OscillatorParams::new(1.0, 0.2).unwrap();
        let g = FrequencyGrid::linspace(0.05, 3.0, 300).unwrap();
        let (t1, t2): (Vec<f64>, Vec<f64>) = g.omegas().iter().map(|&w| oscillator_tau(&p, w)).unzip();
        let ext = extend_negative_frequencies(&TemporalSpectrum::new(g, t1, t2).unwrap()).unwrap();
        for ((&w, &a), &b) in ext.omegas().iter().zip(ext.tau1()).zip(ext.tau2()) {
            let (c, d) = oscillator_tau(&p, w);
            assert!((a - c).abs() < 1e-10 && (b - d).abs() < 1e-10, "w={w}");
        }
    }

    proptest! {
        #[test]
        fn mirror_is_involution_on_positive_part(
            start in 0.01f64..1.0,
            vals in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 3..40),
        ) {
            let n = vals.len();
            let g = FrequencyGrid::linspace(start, start + n as f64, n).unwrap();
            let (t1, t2): (Vec<f64>, Vec<f64>) = vals.into_iter().unzip();
            let tau = TemporalSpectrum::new(g, t1, t2).unwrap();
            let back = positive_part(&extend_negative_frequencies(&tau).unwrap()).unwrap();
            prop_assert_eq!(back, tau);
        }
    }
}
