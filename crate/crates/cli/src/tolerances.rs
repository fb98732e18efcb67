//! Thresholds the CLI judges results against, each with where it comes from.

use scatter_time::dispersion::hilbert::TAIL_FIT_FRACTION;
use scatter_time::dispersion::sum_rules::ORIGIN_RTOL;
use scatter_time::dispersion::winding::CONTOUR_CLEARANCE;
use scatter_time::model::POLE_THRESHOLD;
use scatter_time::spectrum::UNIFORM_RTOL;

use crate::format::{obj, Json};

/// Normalised KK residual below which a spectrum counts as causal.
pub const KK_CAUSAL_RESIDUAL: f64 = 2e-2;
/// `|∫ S/ω·(τ - i/ω)| / ∫|S/ω|·|τ|` below which the frequency sum rule holds.
pub const SUM_RULE_RELATIVE: f64 = 1e-2;
/// Distance of a winding number from the nearest integer.
pub const WINDING_ABS: f64 = 1e-3;

pub struct Tolerance {
    pub name: &'static str,
    pub value: f64,
    pub source: &'static str,
}

pub const TABLE: &[Tolerance] = &[
    Tolerance {
        name: "kk_causal_residual",
        value: KK_CAUSAL_RESIDUAL,
        source: "truncation level of a retarded pole 1/(w-1+0.1i) on [-60,60], 40001 nodes, 1/w tail",
    },
    Tolerance {
        name: "sum_rule_relative",
        value: SUM_RULE_RELATIVE,
        source: "fraction of the integrand's L1 scale accepted as zero for single-resonance models",
    },
    Tolerance {
        name: "winding_abs",
        value: WINDING_ABS,
        source: "8-point Gauss-Legendre on >= 16 pieces per edge, argument-principle integer",
    },
    Tolerance {
        name: "uniform_grid_rtol",
        value: UNIFORM_RTOL,
        source: "largest relative spacing deviation of a grid treated as uniform",
    },
    Tolerance {
        name: "pole_threshold",
        value: POLE_THRESHOLD,
        source: "closest approach of an evaluation point to a model pole",
    },
    Tolerance {
        name: "tail_fit_fraction",
        value: TAIL_FIT_FRACTION,
        source: "share of nodes at each end fitted by the tail model and excluded from KK residuals",
    },
    Tolerance {
        name: "origin_rtol",
        value: ORIGIN_RTOL,
        source: "nodes within this fraction of the span from w = 0 count as sampling the origin",
    },
    Tolerance {
        name: "contour_clearance",
        value: CONTOUR_CLEARANCE,
        source: "closest approach of a contour to a zero or pole",
    },
];

pub fn as_json() -> Json {
    TABLE
        .iter()
        .fold(obj(), |acc, t| acc.with(t.name, obj().with("value", t.value).with("source", t.source)))
}
