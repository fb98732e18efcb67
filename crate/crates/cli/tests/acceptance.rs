//! Acceptance criteria AC1-AC12, one line each.
//!
//! Runs as a plain binary (`harness = false`). Every criterion is checked
//! against its pinned tolerance and reported as PASS or FAIL. The process
//! exits non-zero when a criterion fails that is not listed in
//! [`KNOWN_UNATTAINABLE`]; those still print FAIL with their measured values.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use scatter_time::dispersion::{
    frequency_sum_rule, kk_residual, residue_time_domain, resonance_time_transform, time_transform, winding_number,
    TailModel,
};
use scatter_time::physics::kinetic::{group_index_coefficient, mean_delay, KineticMediumParams};
use scatter_time::physics::oscillator::{oscillator_green, oscillator_tau, OscillatorParams};
use scatter_time::physics::qed::{cross_section_tau2, photon_tau};
use scatter_time::scatter1d::{formation_time, s_matrix, wigner_delay, PotentialProfile};
use scatter_time::uncertainty::uncertainty_product;
use scatter_time::{
    extract_temporal, reconstruct_spectrum, ComplexSpectrum, Contour, ExtractionOptions, FrequencyGrid, PoleZeroModel,
    TemporalSpectrum,
};

const AC1_REL: f64 = 1e-4;
const AC1_RUNTIME: Duration = Duration::from_secs(1);
const AC2_ABS: f64 = 1e-3;
const AC3_REL: f64 = 1e-6;
const AC4_CAUSAL: f64 = 2e-2;
const AC4_RATIO: f64 = 10.0;
const AC5_REL: f64 = 1e-2;
const AC6_ABS: f64 = 1e-3;
const AC6_EMPTY_ABS: f64 = 1e-6;
const AC7_L2: f64 = 1e-2;
const AC8_GROUP_INDEX: f64 = 3e-22;
const AC8_GROUP_REL: f64 = 0.2;
const AC8_DELAY_RANGE: (f64, f64) = (1e-16, 1e-15);
const AC8_TAU2_ABS: f64 = 1e-3;
const AC9_ABS: f64 = 1e-6;
const AC10_TRANSMISSION: f64 = 0.2107711;
const AC10_TRANSMISSION_ABS: f64 = 1e-5;
const AC10_UNITARITY: f64 = 1e-10;
const AC10_HARTMAN_REL: f64 = 1e-2;
const AC11_PRODUCT: f64 = 0.5;
const AC11_PRODUCT_ABS: f64 = 1e-2;
const AC11_BOUND_SLACK: f64 = 1e-6;
const AC11_NARROW_REL: f64 = 5e-3;
const AC12_RUNTIME: Duration = Duration::from_secs(30);

/// Criteria that fail as stated; the reasons are in the project's decision notes.
const KNOWN_UNATTAINABLE: &[&str] = &["AC5", "AC7"];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn blaschke() -> PoleZeroModel {
    PoleZeroModel::blaschke(&[(1.0, 0.2)]).unwrap()
}

fn sampled(model: &PoleZeroModel, grid: &FrequencyGrid) -> ComplexSpectrum {
    ComplexSpectrum::try_sample(grid.clone(), |w| model.evaluate_real(w)).unwrap()
}

fn model_tau(model: &PoleZeroModel, grid: &FrequencyGrid) -> TemporalSpectrum {
    let tau: Vec<Complex64> = grid.omegas().iter().map(|&w| model.tau(w).unwrap()).collect();
    TemporalSpectrum::from_complex(grid.clone(), &tau).unwrap()
}

fn ac1() -> Outcome {
    let grid = FrequencyGrid::linspace(0.0, 2.0, 4001).unwrap();
    let s = sampled(&blaschke(), &grid);
    let start = Instant::now();
    let tau = extract_temporal(&s, &ExtractionOptions::fourth_order()).unwrap();
    let elapsed = start.elapsed();
    let err = grid
        .omegas()
        .iter()
        .zip(tau.tau1())
        .map(|(w, t)| {
            let exact = 0.2 / ((w - 1.0).powi(2) + 0.01);
            (t - exact).abs() / exact
        })
        .fold(0.0, f64::max);
    outcome(
        err < AC1_REL && elapsed < AC1_RUNTIME,
        format!("max rel err {err:.3e} (< {AC1_REL:e}), {elapsed:?} (< {AC1_RUNTIME:?})"),
    )
}

fn ac2() -> Outcome {
    let p = OscillatorParams::new(1.0, 0.2).unwrap();
    let grid = FrequencyGrid::linspace(0.0, 2.0, 4001).unwrap();
    let s = ComplexSpectrum::sample(grid.clone(), |w| oscillator_green(&p, w)).unwrap();
    let tau = extract_temporal(&s, &ExtractionOptions::default()).unwrap();
    let err = tau
        .interior()
        .map(|i| {
            let (t1, t2) = oscillator_tau(&p, grid.omegas()[i]);
            (tau.tau1()[i] - t1).abs().max((tau.tau2()[i] - t2).abs())
        })
        .fold(0.0, f64::max);
    outcome(err < AC2_ABS, format!("oscillator max abs err {err:.3e} (< {AC2_ABS:e})"))
}

fn round_trip_error(s: &ComplexSpectrum) -> f64 {
    let tau = extract_temporal(s, &ExtractionOptions::fourth_order()).unwrap();
    let w0 = s.omegas()[0];
    let back = reconstruct_spectrum(&tau, w0, s.values()[0]).unwrap();
    s.values().iter().zip(back.values()).map(|(a, b)| (a - b).norm() / a.norm()).fold(0.0, f64::max)
}

fn ac3() -> Outcome {
    let grid = FrequencyGrid::linspace(0.0, 2.0, 4001).unwrap();
    let b = round_trip_error(&sampled(&blaschke(), &grid));
    let p = OscillatorParams::new(1.0, 0.2).unwrap();
    let o = round_trip_error(&ComplexSpectrum::sample(grid, |w| oscillator_green(&p, w)).unwrap());
    outcome(
        b < AC3_REL && o < AC3_REL,
        format!("blaschke {b:.3e}, oscillator {o:.3e} (< {AC3_REL:e})"),
    )
}

fn ac4() -> Outcome {
    let grid = FrequencyGrid::linspace(-60.0, 60.0, 40001).unwrap();
    let pole = |sign: f64| ComplexSpectrum::sample(grid.clone(), |w| 1.0 / Complex64::new(w - 1.0, sign * 0.1)).unwrap();
    let causal = kk_residual(&pole(1.0), TailModel::OneOverOmega).unwrap().residual_max;
    let acausal = kk_residual(&pole(-1.0), TailModel::OneOverOmega).unwrap().residual_max;
    let ratio = acausal / causal;
    outcome(
        causal < AC4_CAUSAL && ratio > AC4_RATIO,
        format!("causal {causal:.3e} (< {AC4_CAUSAL:e}), acausal/causal {ratio:.3e} (> {AC4_RATIO})"),
    )
}

/// Uniform grid on `[-to, to]` with nodes at half-steps, so `ω = 0` is skipped.
fn mirrored(to: f64, half_points: usize) -> FrequencyGrid {
    let half = FrequencyGrid::half_offset(to, half_points).unwrap();
    let mut w: Vec<f64> = half.omegas().iter().rev().map(|w| -w).collect();
    w.extend_from_slice(half.omegas());
    FrequencyGrid::new(w).unwrap()
}

fn ac5() -> Outcome {
    // S = c/ω on [0.1, 100] mirrored
    let pos = FrequencyGrid::linspace(0.1, 100.0, 2001).unwrap();
    let mut w: Vec<f64> = pos.omegas().iter().rev().map(|w| -w).collect();
    w.extend_from_slice(pos.omegas());
    let grid = FrequencyGrid::new(w).unwrap();
    let inverse = PoleZeroModel::new(Complex64::new(2.0, 0.0), 1, vec![]).unwrap();
    let s = sampled(&inverse, &grid);
    let tau = model_tau(&inverse, &grid);
    let pointwise = grid
        .omegas()
        .iter()
        .zip(tau.complex())
        .map(|(&w, t)| (t - Complex64::new(0.0, 1.0 / w)).norm())
        .fold(0.0, f64::max);
    let zero = frequency_sum_rule(&s, &tau).unwrap().value;

    let grid = mirrored(50.0, 10000);
    let rule = frequency_sum_rule(&sampled(&blaschke(), &grid), &model_tau(&blaschke(), &grid)).unwrap();
    let rel = rule.relative();
    outcome(
        pointwise == 0.0 && zero == Complex64::new(0.0, 0.0) && rel < AC5_REL,
        format!(
            "c/w integrand max {pointwise:e}, value {zero}; blaschke |value|/L1 {rel:.3e} (< {AC5_REL:e}), \
             |value|/integrand L1 {:.3e}, exclusion radius {:.3e}",
            rule.relative_to_integrand(),
            rule.exclusion_radius
        ),
    )
}

fn ac6() -> Outcome {
    let m = blaschke();
    let upper = Contour::rectangle(0.0, 2.0, 0.02, 1.0).unwrap();
    let zero = winding_number(&m, &upper, 64).unwrap();
    let pole = winding_number(&m, &upper.conjugate(), 64).unwrap();
    let empty = winding_number(&m, &Contour::rectangle(2.5, 4.0, -1.0, 1.0).unwrap(), 64).unwrap();
    outcome(
        (zero - 1.0).abs() < AC6_ABS && (pole + 1.0).abs() < AC6_ABS && empty.abs() < AC6_EMPTY_ABS,
        format!("zero {zero:.6}, pole {pole:.6} (± {AC6_ABS:e}), empty {empty:.1e} (± {AC6_EMPTY_ABS:e})"),
    )
}

fn ac7() -> Outcome {
    let m = blaschke();
    let grid = FrequencyGrid::linspace(-400.0, 400.0, 80001).unwrap();
    let tau = model_tau(&m, &grid);
    let times: Vec<f64> = (-400..=400).map(|k| k as f64 * 0.05).collect();
    let (mut diff, mut norm, mut exact_diff) = (0.0, 0.0, 0.0);
    for &t in &times {
        let (n1, n2) = time_transform(&tau, t);
        let (s1, s2) = residue_time_domain(&m, t);
        diff += (n1 - s1).norm_sqr() + (n2 - s2).norm_sqr();
        norm += n1.norm_sqr() + n2.norm_sqr();
        exact_diff += (n1 - resonance_time_transform(&m, t)).norm_sqr();
    }
    let l2 = (diff / norm).sqrt();
    let exact_l2 = (exact_diff / norm).sqrt();
    let origin_one = residue_time_domain(&m, 0.0).0;
    let three = PoleZeroModel::blaschke(&[(1.0, 0.2), (2.0, 0.3), (3.5, 0.1)]).unwrap();
    let origin_three = residue_time_domain(&three, 0.0).0;
    outcome(
        l2 < AC7_L2 && origin_one == -1.0 && origin_three == -3.0,
        format!(
            "series vs numerical L2 {l2:.3e} (< {AC7_L2:e}); numerical tau1 image vs exact image L2 {exact_l2:.3e}; \
             tau1(0) = {origin_one}, {origin_three}"
        ),
    )
}

fn ac8() -> Outcome {
    let optical = KineticMediumParams::new(0.0, 6.3e4, 1e8).unwrap();
    let coeff = group_index_coefficient(&optical);
    let coeff_rel = (coeff / AC8_GROUP_INDEX - 1.0).abs();
    let delay = mean_delay(&optical);
    let fine = |c: f64| FrequencyGrid::linspace(c - 0.05, c + 0.05, 1001).unwrap();
    let g = fine(2.0);
    let rutherford: Vec<f64> = g.omegas().iter().map(|e| 3.0 / (e * e)).collect();
    let r = (cross_section_tau2(&rutherford, &g).unwrap()[500] - 0.5).abs();
    let g = fine(0.1);
    let compton: Vec<f64> = g.omegas().iter().map(|w| 2.0 * (1.0 - 2.0 * w)).collect();
    let c = (cross_section_tau2(&compton, &g).unwrap()[500] - 1.0 / (1.0 - 0.2)).abs();
    outcome(
        coeff_rel < AC8_GROUP_REL
            && delay > AC8_DELAY_RANGE.0
            && delay < AC8_DELAY_RANGE.1
            && r < AC8_TAU2_ABS
            && c < AC8_TAU2_ABS,
        format!(
            "group index coeff {coeff:.3e} cm^3 ({:.1}% off), mean delay {delay:.3e} s, \
             Rutherford err {r:.1e}, Compton err {c:.1e}",
            100.0 * coeff_rel
        ),
    )
}

fn ac9() -> Outcome {
    let eta = 1e-9;
    let above = photon_tau(2.0, 1.0, eta).unwrap().1;
    let below = photon_tau(0.5, 1.0, eta).unwrap().1;
    let on = photon_tau(1.0, 1.0, eta).unwrap().1;
    let flips = photon_tau(1.0 + 1e-6, 1.0, eta).unwrap().1 > 0.0 && photon_tau(1.0 - 1e-6, 1.0, eta).unwrap().1 < 0.0;
    outcome(
        (above - 4.0 / 3.0).abs() < AC9_ABS && (below + 4.0 / 3.0).abs() < AC9_ABS && on == 0.0 && flips,
        format!("tau2(2,1) = {above:.9}, tau2(0.5,1) = {below:.9}, tau2(1,1) = {on}, sign flip at |k|: {flips}"),
    )
}

fn ac10() -> Outcome {
    let barrier = PotentialProfile::barrier(2.0, 1.0).unwrap();
    let t = s_matrix(&barrier, 0.5).unwrap().transmission();
    let energies: Vec<f64> = (1..=190).map(|k| 0.005 * k as f64).collect();
    let profiles = [
        barrier.clone(),
        PotentialProfile::barrier(10.0, 1.0).unwrap(),
        PotentialProfile::new(vec![
            scatter_time::scatter1d::Segment { width: 2.0, height: 1.0 },
            scatter_time::scatter1d::Segment { width: 3.0, height: 0.0 },
            scatter_time::scatter1d::Segment { width: 2.0, height: 1.0 },
        ])
        .unwrap(),
    ];
    let defect = profiles
        .iter()
        .flat_map(|p| energies.iter().map(move |&e| s_matrix(p, e).unwrap().unitarity_defect()))
        .fold(0.0, f64::max);
    // κ = 1 at E = 0.5, so widths 10 and 20 have κa > 8
    let delay = |w: f64| wigner_delay(&PotentialProfile::barrier(w, 1.0).unwrap(), 0.5, 1e-5).unwrap();
    let (d10, d20) = (delay(10.0), delay(20.0));
    let hartman = (d20 - d10).abs() / d10;
    let worst_tau2 = energies
        .iter()
        .filter(|&&e| e < 0.95)
        .map(|&e| formation_time(&barrier, e, 1e-5).unwrap())
        .fold(f64::NEG_INFINITY, f64::max);
    outcome(
        (t - AC10_TRANSMISSION).abs() < AC10_TRANSMISSION_ABS
            && defect < AC10_UNITARITY
            && hartman < AC10_HARTMAN_REL
            && worst_tau2 < 0.0,
        format!(
            "|t|^2 = {t:.7} (oracle {AC10_TRANSMISSION} ± {AC10_TRANSMISSION_ABS:e}), unitarity {defect:.1e}, \
             delay change on doubling {:.3}%, max sub-barrier tau2 {worst_tau2:.3e}",
            100.0 * hartman
        ),
    )
}

fn ac11() -> Outcome {
    let grid = FrequencyGrid::linspace(0.0, 10.0, 2001).unwrap();
    let spectrum = |f: &dyn Fn(f64) -> Complex64| ComplexSpectrum::sample(grid.clone(), f).unwrap();
    let gaussian = uncertainty_product(&spectrum(&|e| Complex64::new((-(e - 5.0).powi(2)).exp(), 0.0))).unwrap();

    let mut tested = vec![
        spectrum(&|e| Complex64::new((-(e - 5.0).powi(2)).exp(), 0.0)),
        spectrum(&|e| Complex64::new(-(e - 5.0).powi(2), 2.0 * (e - 5.0).powi(2)).exp()),
        spectrum(&|e| Complex64::new(1.0 / (1.0 + (e - 5.0).powi(4)), 0.0)),
    ];
    for width in [0.4, 0.8, 1.2] {
        for chirp in [-2.0, -0.5, 0.5, 2.0] {
            tested.push(spectrum(&|e| {
                let x = e - 5.0;
                Complex64::from_polar((-(x / width).powi(2)).exp(), chirp * x * x)
            }));
        }
    }
    let worst = tested
        .iter()
        .map(|s| {
            let u = uncertainty_product(s).unwrap();
            u.product().powi(2) - u.correlated_bound()
        })
        .fold(f64::INFINITY, f64::min);

    let narrow = OscillatorParams::new(1.0, 1e-3).unwrap();
    let (_, t2) = oscillator_tau(&narrow, 1.01);
    let near = 1.0 / (1.01 - narrow.omega1());
    let narrow_rel = (t2 - near).abs() / near;
    outcome(
        (gaussian.product() - AC11_PRODUCT).abs() < AC11_PRODUCT_ABS
            && worst >= -AC11_BOUND_SLACK
            && narrow_rel < AC11_NARROW_REL,
        format!(
            "gaussian dE*dt = {:.5}, min (dEdt)^2 - bound over {} spectra {worst:.3e}, \
             narrow tau2 {t2:.4} vs 1/(w-w1) {near:.4} ({:.3}%)",
            gaussian.product(),
            tested.len(),
            100.0 * narrow_rel
        ),
    )
}

fn run_demo(out: &Path, threads: &str) -> Duration {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let start = Instant::now();
    let status = Command::new("sh")
        .arg(root.join("demo/run.sh"))
        .arg(env!("CARGO_BIN_EXE_scattime"))
        .arg(out)
        .env("RAYON_NUM_THREADS", threads)
        .status()
        .expect("demo runs");
    assert!(status.success(), "demo pipeline failed");
    start.elapsed()
}

fn files(dir: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                out.push((path.strip_prefix(dir).unwrap().to_path_buf(), std::fs::read(&path).unwrap()));
            }
        }
    }
    out.sort();
    out
}

fn ac12() -> Outcome {
    let tmp = tempfile::tempdir().unwrap();
    let (a, b) = (tmp.path().join("one"), tmp.path().join("four"));
    let ta = run_demo(&a, "1");
    let tb = run_demo(&b, "4");
    let (fa, fb) = (files(&a), files(&b));
    let identical = !fa.is_empty() && fa == fb;
    let slowest = ta.max(tb);
    outcome(
        identical && slowest < AC12_RUNTIME,
        format!("{} files byte-identical: {identical}, slowest run {slowest:.2?} (< {AC12_RUNTIME:?})", fa.len()),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
        ("AC11", ac11),
        ("AC12", ac12),
    ];
    let mut unexpected = Vec::new();
    for (id, check) in criteria {
        let o = check();
        let known = KNOWN_UNATTAINABLE.contains(&id);
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && known { " [known unattainable]" } else { "" };
        println!("{id:<5} {tag}{note}  {}", o.detail);
        if !o.pass && !known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {}", unexpected.join(", "));
        std::process::exit(1);
    }
}
