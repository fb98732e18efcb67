//! Dispersion relations, sum rules and contour integrals of temporal functions.

pub mod hilbert;
pub mod kk;
pub mod residue;
pub mod sum_rules;
pub mod winding;

pub use hilbert::{hilbert_transform, hilbert_transform_complex, hilbert_transform_with_tail, TailModel};
pub use kk::{kk_residual, tau_kk_residual, KKReport};
pub use residue::{residue_time_domain, resonance_time_transform, time_transform};
pub use sum_rules::{frequency_sum_rule, time_sum_rule, FrequencySumRule};
pub use winding::winding_number;
