//! One function per verb.

use std::path::{Path, PathBuf};

use scatter_time::dispersion::{frequency_sum_rule, kk_residual, tau_kk_residual, winding_number, KKReport, TailModel};
use scatter_time::scatter1d::{formation_time, s_matrix, wigner_delay};
use scatter_time::{extract_temporal, ComplexSpectrum, Contour, ExtractionOptions, FrequencyGrid, TemporalSpectrum};

use crate::error::{CliError, CliResult, Context};
use crate::format::{obj, sci, Json};
use crate::io;
use crate::model_file::{load_pole_zero, sample, Model, BARRIER_STEP};
use crate::tolerances::{KK_CAUSAL_RESIDUAL, SUM_RULE_RELATIVE};

pub struct Output {
    pub path: PathBuf,
    pub gnuplot: bool,
}

fn emit(out: &Output, header: &[&str], text: &str) -> CliResult<()> {
    io::write_text(&out.path, text)?;
    if out.gnuplot {
        io::write_gnuplot(&out.path, header)?;
    }
    Ok(())
}

fn name(path: &Path) -> String {
    path.display().to_string()
}

pub fn extract(input: &Path, options: &ExtractionOptions, out: &Output) -> CliResult<()> {
    let spectrum = io::read_spectrum(input)?;
    let tau = extract_temporal(&spectrum, options).context(&name(input))?;
    emit(out, &io::TEMPORAL_HEADER, &io::temporal_table(&tau))
}

fn grid(from: f64, to: f64, points: usize) -> CliResult<FrequencyGrid> {
    if !(from.is_finite() && to.is_finite() && to > from) {
        return Err(CliError::Input(format!("grid needs finite from < to, got {from}, {to}")));
    }
    FrequencyGrid::linspace(from, to, points).context("grid")
}

pub fn model(path: &Path, from: f64, to: f64, points: usize, prefix: &Path, gnuplot: bool) -> CliResult<()> {
    let model = Model::load(path)?;
    let grid = grid(from, to, points)?;
    let label = name(path);
    let mut values = Vec::with_capacity(points);
    let (mut tau1, mut tau2) = (Vec::with_capacity(points), Vec::with_capacity(points));
    for &w in grid.omegas() {
        let (s, (t1, t2)) = sample(&model, w, &label)?;
        values.push(s);
        tau1.push(t1);
        tau2.push(t2);
    }
    let spectrum = ComplexSpectrum::new(grid.clone(), values).context(&label)?;
    let tau = TemporalSpectrum::new(grid, tau1, tau2).context(&label)?;
    let (spectrum_path, tau_path) = model_outputs(prefix);
    emit(&Output { path: spectrum_path, gnuplot }, &io::SPECTRUM_HEADER, &io::spectrum_table(&spectrum))?;
    emit(&Output { path: tau_path, gnuplot }, &io::TEMPORAL_HEADER, &io::temporal_table(&tau))
}

/// `<prefix>.spectrum.csv` and `<prefix>.tau.csv`.
pub fn model_outputs(prefix: &Path) -> (PathBuf, PathBuf) {
    let with = |suffix: &str| {
        let mut p = prefix.as_os_str().to_owned();
        p.push(suffix);
        PathBuf::from(p)
    };
    (with(".spectrum.csv"), with(".tau.csv"))
}

pub fn tail_name(tail: TailModel) -> &'static str {
    match tail {
        TailModel::None => "none",
        TailModel::OneOverOmega => "w1",
        TailModel::OneOverOmegaSquared => "w2",
    }
}

pub fn kk_json(r: &KKReport) -> Json {
    obj()
        .with("residual_max", r.residual_max)
        .with("residual_l2", r.residual_l2)
        .with("residual_max_abs", r.residual_max_abs)
        .with("argmax_omega", r.argmax_omega)
        .with("tail_model", tail_name(r.tail_model))
        .with("evaluated_nodes", vec![r.evaluated.start, r.evaluated.end])
        .with("origin_exclusion", r.origin_exclusion)
        .with("causal", r.residual_max < KK_CAUSAL_RESIDUAL)
}

pub fn kk(input: &Path, tail: TailModel) -> CliResult<String> {
    let label = name(input);
    let report = match io::sniff(input)? {
        Some(io::TableKind::Temporal) => tau_kk_residual(&io::read_temporal(input)?, tail).context(&label)?,
        _ => kk_residual(&io::read_spectrum(input)?, tail).context(&label)?,
    };
    Ok(obj().with("input", label).with("kk", kk_json(&report)).render())
}

pub fn sum_rule_json(spectrum: &ComplexSpectrum, tau: &TemporalSpectrum, label: &str) -> CliResult<Json> {
    let r = frequency_sum_rule(spectrum, tau).context(label)?;
    Ok(obj()
        .with("value_re", r.value.re)
        .with("value_im", r.value.im)
        .with("l1_scale", r.l1_scale)
        .with("relative", r.relative())
        .with("integrand_l1", r.integrand_l1)
        .with("relative_to_integrand", r.relative_to_integrand())
        .with("exclusion_radius", r.exclusion_radius)
        .with("tolerance", SUM_RULE_RELATIVE)
        .with("within_tolerance", r.relative() < SUM_RULE_RELATIVE))
}

pub fn sumrule(spectrum: &Path, tau: &Path) -> CliResult<String> {
    let s = io::read_spectrum(spectrum)?;
    let t = io::read_temporal(tau)?;
    let label = format!("{} + {}", name(spectrum), name(tau));
    Ok(obj()
        .with("spectrum", name(spectrum))
        .with("tau", name(tau))
        .with("sum_rule", sum_rule_json(&s, &t, &label)?)
        .render())
}

pub fn winding(path: &Path, rect: &[f64], samples: usize) -> CliResult<String> {
    let model = load_pole_zero(path)?;
    let [x0, x1, y0, y1] = rect else {
        return Err(CliError::Input("--rect takes four numbers: x0 x1 y0 y1".into()));
    };
    let contour = Contour::rectangle(*x0, *x1, *y0, *y1).context("--rect")?;
    let value = winding_number(&model, &contour, samples).context(&name(path))?;
    Ok(format!("{}\n", sci(value)))
}

pub const BARRIER_HEADER: [&str; 6] = ["energy", "transmission", "phase", "tau1", "tau2", "unitarity_defect"];

pub fn barrier(path: &Path, from: f64, to: f64, points: usize) -> CliResult<String> {
    let Model::Barrier(profile) = Model::load(path)? else {
        return Err(CliError::Input(format!("{}: barrier sweep needs a barrier model", name(path))));
    };
    let grid = grid(from, to, points)?;
    let label = name(path);
    let mut rows = Vec::with_capacity(points);
    for &e in grid.omegas() {
        let s = s_matrix(&profile, e).context(&label)?;
        let tau1 = wigner_delay(&profile, e, BARRIER_STEP).context(&label)?;
        let tau2 = formation_time(&profile, e, BARRIER_STEP).context(&label)?;
        rows.push(vec![e, s.transmission(), s.t.arg(), tau1, tau2, s.unitarity_defect()]);
    }
    Ok(io::render_table(&BARRIER_HEADER, rows.into_iter()))
}
