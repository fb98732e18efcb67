//! Temporal functions of scattering amplitudes and response spectra.
//!
//! For a complex response `S(ω)` the temporal function is
//! `τ(ω) = -i d ln S/dω = τ₁ + iτ₂`: `τ₁ = d arg S/dω` is the delay and
//! `τ₂ = -d ln|S|/dω` the formation (dressing) time. The crate extracts both
//! from samples, reconstructs spectra from them, checks causality through
//! dispersion relations and sum rules, and evaluates closed forms for a set of
//! physical models and for one-dimensional potential scattering.
//!
//! ```
//! use scatter_time::{ComplexSpectrum, ExtractionOptions, FrequencyGrid, PoleZeroModel, extract_temporal};
//!
//! let model = PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap();
//! let grid = FrequencyGrid::linspace(0.0, 2.0, 4001).unwrap();
//! let s = ComplexSpectrum::try_sample(grid, |w| model.evaluate_real(w)).unwrap();
//! let tau = extract_temporal(&s, &ExtractionOptions::fourth_order()).unwrap();
//! assert!((tau.tau1()[2000] - 20.0).abs() < 1e-3);
//! ```

pub mod contour;
pub mod dispersion;
pub mod error;
pub mod extract;
pub mod model;
pub mod numeric;
pub mod physics;
pub mod reconstruct;
pub mod response;
pub mod scatter1d;
pub mod spectrum;
pub mod uncertainty;
pub mod wigner;

pub use contour::Contour;
pub use error::{Error, Result};
pub use extract::{broadening, extract_temporal, BroadeningSpectrum, ExtractionOptions};
pub use model::{evaluate_model, model_tau, PoleZeroModel, PrefactorBranch, Resonance};
pub use numeric::StencilOrder;
pub use reconstruct::{extend_negative_frequencies, positive_part, reconstruct_spectrum};
pub use spectrum::{ComplexSpectrum, FrequencyGrid, TemporalSpectrum};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/temporal-functions.md")]
    struct TemporalFunctions;
    #[doc = include_str!("../../../book/src/dispersion.md")]
    struct Dispersion;
    #[doc = include_str!("../../../book/src/models.md")]
    struct Models;
    #[doc = include_str!("../../../book/src/scattering.md")]
    struct Scattering;
}
