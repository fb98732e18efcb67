//! Table files: `omega,re,im` spectra and `omega,tau1,tau2` temporal functions.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use scatter_time::{ComplexSpectrum, FrequencyGrid, TemporalSpectrum};

use crate::error::{CliError, CliResult, Context};
use crate::format::sci;

pub const SPECTRUM_HEADER: [&str; 3] = ["omega", "re", "im"];
pub const TEMPORAL_HEADER: [&str; 3] = ["omega", "tau1", "tau2"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Spectrum,
    Temporal,
}

/// Which table a file holds, judged by its header line.
pub fn sniff(path: &Path) -> CliResult<Option<TableKind>> {
    let text = read_text(path)?;
    let first = text.lines().next().unwrap_or("").trim_end_matches('\r');
    Ok(if first == SPECTRUM_HEADER.join(",") {
        Some(TableKind::Spectrum)
    } else if first == TEMPORAL_HEADER.join(",") {
        Some(TableKind::Temporal)
    } else {
        None
    })
}

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: cannot read: {e}", path.display())))
}

/// Three finite columns under the exact header `expected`.
fn read_columns(path: &Path, expected: [&str; 3]) -> CliResult<[Vec<f64>; 3]> {
    let name = path.display();
    let text = read_text(path)?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| CliError::Input(format!("{name}: {e}")))?;
    if header.iter().collect::<Vec<_>>() != expected {
        return Err(CliError::Input(format!(
            "{name}: header must be exactly `{}`",
            expected.join(",")
        )));
    }
    let mut cols: [Vec<f64>; 3] = Default::default();
    for (row, record) in reader.records().enumerate() {
        let line = row + 2;
        let record = record.map_err(|e| CliError::Input(format!("{name}: line {line}: {e}")))?;
        if record.len() != 3 {
            return Err(CliError::Input(format!("{name}: line {line}: expected 3 fields, got {}", record.len())));
        }
        for (col, field) in cols.iter_mut().zip(record.iter()) {
            let v: f64 = field
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("{name}: line {line}: `{field}` is not a number")))?;
            if !v.is_finite() {
                return Err(CliError::Input(format!("{name}: line {line}: non-finite value")));
            }
            col.push(v);
        }
    }
    if cols[0].is_empty() {
        return Err(CliError::Input(format!("{name}: no data rows")));
    }
    Ok(cols)
}

/// Node error accepted when snapping a read grid back to equal spacing,
/// relative to its largest `|ω|`. Covers the rounding of `%.12e` cells.
pub const PRINT_RTOL: f64 = 1e-12;

/// Grid from a frequency column. A column that is equally spaced up to
/// print rounding is replaced by the exact equally spaced nodes.
fn read_grid(omega: Vec<f64>, name: &str) -> CliResult<FrequencyGrid> {
    let grid = FrequencyGrid::new(omega).context(name)?;
    if grid.is_uniform() {
        return Ok(grid);
    }
    let exact = FrequencyGrid::linspace(grid.first(), grid.last(), grid.len()).context(name)?;
    let reach = grid.first().abs().max(grid.last().abs());
    let off = grid.omegas().iter().zip(exact.omegas()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(if off <= PRINT_RTOL * reach { exact } else { grid })
}

pub fn read_spectrum(path: &Path) -> CliResult<ComplexSpectrum> {
    let [omega, re, im] = read_columns(path, SPECTRUM_HEADER)?;
    let name = path.display().to_string();
    let grid = read_grid(omega, &name)?;
    let values = re.into_iter().zip(im).map(|(a, b)| Complex64::new(a, b)).collect();
    ComplexSpectrum::new(grid, values).context(&name)
}

pub fn read_temporal(path: &Path) -> CliResult<TemporalSpectrum> {
    let [omega, tau1, tau2] = read_columns(path, TEMPORAL_HEADER)?;
    let name = path.display().to_string();
    let grid = read_grid(omega, &name)?;
    TemporalSpectrum::new(grid, tau1, tau2).context(&name)
}

/// Comma-separated table with `\n` line ends and `%.12e` cells.
pub fn render_table(header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(sci).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn spectrum_table(s: &ComplexSpectrum) -> String {
    render_table(
        &SPECTRUM_HEADER,
        s.omegas().iter().zip(s.values()).map(|(w, v)| vec![*w, v.re, v.im]),
    )
}

pub fn temporal_table(t: &TemporalSpectrum) -> String {
    render_table(
        &TEMPORAL_HEADER,
        (0..t.len()).map(|i| vec![t.omegas()[i], t.tau1()[i], t.tau2()[i]]),
    )
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: cannot write: {e}", path.display())))
}

/// Gnuplot script plotting columns 2.. of a table against column 1.
pub fn gnuplot_script(table: &Path, header: &[&str]) -> String {
    let file = table.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let mut out = String::from("set datafile separator ','\nset key autotitle columnhead\n");
    out.push_str(&format!("set xlabel '{}'\n", header[0]));
    let series: Vec<String> = (2..=header.len()).map(|c| format!("'{file}' using 1:{c} with lines")).collect();
    out.push_str(&format!("plot {}\n", series.join(", \\\n     ")));
    out
}

/// Writes `<table>.gp` next to the table.
pub fn write_gnuplot(table: &Path, header: &[&str]) -> CliResult<()> {
    let mut script = table.as_os_str().to_owned();
    script.push(".gp");
    write_text(Path::new(&script), &gnuplot_script(table, header))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(text: &str) -> tempfile::NamedTempFile {
        let f = tempfile::NamedTempFile::new().unwrap();
        fs::write(f.path(), text).unwrap();
        f
    }

    #[test]
    fn round_trip() {
        let g = FrequencyGrid::linspace(0.0, 1.0, 5).unwrap();
        let s = ComplexSpectrum::sample(g, |w| Complex64::new(w, -2.0 * w)).unwrap();
        let f = file(&spectrum_table(&s));
        assert_eq!(read_spectrum(f.path()).unwrap(), s);
        assert_eq!(sniff(f.path()).unwrap(), Some(TableKind::Spectrum));
    }

    #[test]
    fn printed_grid_stays_uniform() {
        let g = FrequencyGrid::linspace(-50.0, 50.0, 20000).unwrap();
        let s = ComplexSpectrum::sample(g.clone(), |w| Complex64::new(w, 0.0)).unwrap();
        let back = read_spectrum(file(&spectrum_table(&s)).path()).unwrap();
        assert!(back.grid().is_uniform());
        assert_eq!(back.grid(), &g);
        // genuinely uneven spacing is kept as is
        let t = file("omega,re,im\n0,1,0\n1,1,0\n3,1,0\n");
        assert!(!read_spectrum(t.path()).unwrap().grid().is_uniform());
    }

    #[test]
    fn rejects_bad_tables() {
        for text in [
            "",
            "omega,re,im\n",
            "omega,real,imag\n0,1,0\n1,1,0\n2,1,0\n",
            "omega,re,im\n0,1,0\n1,x,0\n2,1,0\n",
            "omega,re,im\n0,1,0\n1,1\n2,1,0\n",
            "omega,re,im\n0,1,0\n2,1,0\n1,1,0\n",
            "omega,re,im\n0,1,0\n1,inf,0\n2,1,0\n",
        ] {
            assert!(matches!(read_spectrum(file(text).path()), Err(CliError::Input(_))), "{text:?}");
        }
    }

    #[test]
    fn table_format() {
        let t = render_table(&["a", "b"], std::iter::once(vec![1.0, -0.5]));
        assert_eq!(t, "a,b\n1.000000000000e+00,-5.000000000000e-01\n");
    }
}
