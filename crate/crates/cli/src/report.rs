//! Aggregate summary over artifact files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use scatter_time::dispersion::{kk_residual, tau_kk_residual, winding_number, TailModel};
use scatter_time::{extract_temporal, ComplexSpectrum, Contour, ExtractionOptions, PoleZeroModel, TemporalSpectrum};

use crate::commands::{kk_json, sum_rule_json, tail_name};
use crate::error::{CliError, CliResult};
use crate::format::{obj, Json};
use crate::io::{self, TableKind};
use crate::model_file::Model;
use crate::tolerances::{self, WINDING_ABS};

/// Contour samples per edge used for report winding numbers.
pub const REPORT_WINDING_SAMPLES: usize = 64;

fn error_json(err: CliError) -> Json {
    obj().with("error", err.to_string()).with("exit_code", err.code() as usize)
}

fn extraction_json(spectrum: &ComplexSpectrum, options: &ExtractionOptions, label: &str) -> Json {
    match extract_temporal(spectrum, options) {
        Ok(tau) => {
            let range = tau.interior();
            let (mut peak, mut at) = (f64::NEG_INFINITY, 0.0);
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for i in range {
                if tau.tau1()[i] > peak {
                    peak = tau.tau1()[i];
                    at = tau.omegas()[i];
                }
                lo = lo.min(tau.tau2()[i]);
                hi = hi.max(tau.tau2()[i]);
            }
            obj()
                .with("stencil", options.stencil.order() as usize)
                .with("edge_nodes", tau.edge_nodes())
                .with("tau1_max", peak)
                .with("tau1_argmax_omega", at)
                .with("tau2_min", lo)
                .with("tau2_max", hi)
        }
        Err(e) => error_json(CliError::from_library(label, e)),
    }
}

/// Rectangles around each resonance zero and its mirrored pole.
fn winding_json(model: &PoleZeroModel) -> Json {
    let inside = |c: &Contour, z: num_complex::Complex64| {
        let (xs, ys): (Vec<f64>, Vec<f64>) = c.vertices().iter().map(|v| (v.re, v.im)).unzip();
        let span = |v: &[f64]| (v.iter().cloned().fold(f64::INFINITY, f64::min), v.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
        let ((x0, x1), (y0, y1)) = (span(&xs), span(&ys));
        z.re > x0 && z.re < x1 && z.im > y0 && z.im < y1
    };
    let mut rows = Vec::new();
    for r in model.resonances() {
        let upper = Contour::rectangle(r.omega - r.gamma, r.omega + r.gamma, 0.25 * r.gamma, r.gamma).expect("valid rectangle");
        for (side, contour) in [("upper", upper.clone()), ("lower", upper.conjugate())] {
            let expected = model.zeros().filter(|z| inside(&contour, *z)).count() as f64
                - model.poles().filter(|p| inside(&contour, *p)).count() as f64;
            let row = obj().with("omega", r.omega).with("gamma", r.gamma).with("side", side).with("expected", expected);
            rows.push(match winding_number(model, &contour, REPORT_WINDING_SAMPLES) {
                Ok(v) => row.with("value", v).with("within_tolerance", (v - expected).abs() < WINDING_ABS),
                Err(e) => row.with("error", e.to_string()),
            });
        }
    }
    Json::Arr(rows)
}

enum Artifact {
    Spectrum(ComplexSpectrum),
    Temporal(TemporalSpectrum),
    Model(Model),
}

fn load(path: &Path) -> CliResult<Artifact> {
    if path.extension().is_some_and(|e| e == "json") {
        return Model::load(path).map(Artifact::Model);
    }
    match io::sniff(path)? {
        Some(TableKind::Spectrum) => io::read_spectrum(path).map(Artifact::Spectrum),
        Some(TableKind::Temporal) => io::read_temporal(path).map(Artifact::Temporal),
        None => Err(CliError::Input(format!("{}: not a spectrum, temporal or model file", path.display()))),
    }
}

fn stem(path: &Path, suffix: &str) -> Option<PathBuf> {
    let s = path.to_str()?;
    s.strip_suffix(suffix).map(PathBuf::from)
}

pub fn report(inputs: &[PathBuf], options: &ExtractionOptions, tail: TailModel) -> CliResult<String> {
    // read everything first so a bad file fails the whole report
    let artifacts = inputs.iter().map(|p| load(p).map(|a| (p, a))).collect::<CliResult<Vec<_>>>()?;

    let mut entries = Vec::new();
    let mut spectra = BTreeMap::new();
    let mut temporals = BTreeMap::new();
    for (path, artifact) in &artifacts {
        let label = path.display().to_string();
        let entry = obj().with("path", label.clone());
        entries.push(match artifact {
            Artifact::Spectrum(s) => {
                if let Some(base) = stem(path, ".spectrum.csv") {
                    spectra.insert(base, (label.clone(), s));
                }
                let kk = kk_residual(s, tail).map_or_else(|e| error_json(CliError::from_library(&label, e)), |r| kk_json(&r));
                entry
                    .with("kind", "spectrum")
                    .with("points", s.len())
                    .with("extraction", extraction_json(s, options, &label))
                    .with("kk", kk)
            }
            Artifact::Temporal(t) => {
                if let Some(base) = stem(path, ".tau.csv") {
                    temporals.insert(base, (label.clone(), t));
                }
                let kk = tau_kk_residual(t, tail).map_or_else(|e| error_json(CliError::from_library(&label, e)), |r| kk_json(&r));
                entry.with("kind", "temporal").with("points", t.len()).with("kk", kk)
            }
            Artifact::Model(m) => {
                let entry = entry.with("kind", "model").with("type", m.type_name());
                match m {
                    Model::Blaschke(pz) => entry.with("winding", winding_json(pz)),
                    _ => entry,
                }
            }
        });
    }

    let mut sums = Vec::new();
    for (base, (s_label, s)) in &spectra {
        if let Some((t_label, t)) = temporals.get(base) {
            let label = format!("{s_label} + {t_label}");
            let value = sum_rule_json(s, t, &label).unwrap_or_else(error_json);
            sums.push(obj().with("spectrum", s_label.clone()).with("tau", t_label.clone()).with("sum_rule", value));
        }
    }

    Ok(obj()
        .with("inputs", Json::Arr(entries))
        .with("sum_rules", Json::Arr(sums))
        .with(
            "settings",
            obj().with("stencil", options.stencil.order() as usize).with("tail_model", tail_name(tail)),
        )
        .with("tolerances", tolerances::as_json())
        .render())
}
