use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use bell_fourier::fourier::{
    coefficients_2d, coefficients_simple, partial_sum, FourierSpectrum, Spectrum2D,
};
use bell_fourier::lhv::{
    aspect_model, lhv_correlation_exact, AspectTriangle, LhvModel, Pairing, SimpleFunctionSpec,
};
use bell_fourier::quantum::{estimate_correlation, singlet_correlation, Singlet};
use bell_fourier::theorem::{
    chsh_score, incompatibility_report, moment_matrix, IncompatibilityReport, STANDARD_CHSH_ANGLES,
};
use bell_fourier::{Correlation, Outcome, RandomStream};
use serde::Serialize;
use serde_json::json;

use crate::table::{Cell, Table, TableDocument};
use crate::{Cli, CliError, Command, Common, Format, ModelKind, PairingArg};

const DEFAULT_N_RUNS: u64 = 100_000;
const DEFAULT_GRID: &str = "0:0..1pi@64";
const DEFAULT_RECONSTRUCTION_POINTS: u64 = 4096;

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::Simulate => simulate(c),
        Command::Correlate => correlate(c),
        Command::Fourier {
            target,
            reconstruction,
        } => fourier(c, target, reconstruction.as_deref()),
        Command::Theorem => theorem(c),
        Command::Chsh { angles } => chsh(c, angles.unwrap_or(STANDARD_CHSH_ANGLES)),
        Command::Model { kind } => model(c, kind),
    }
}

/// What `--model` names.
enum Target {
    Triangle,
    Model(LhvModel),
}

impl Target {
    fn label(&self) -> String {
        match self {
            Target::Triangle => "aspect".into(),
            Target::Model(m) if m.description().is_empty() => "model".into(),
            Target::Model(m) => m.description().into(),
        }
    }

    fn eval(&self, a: f64, b: f64) -> f64 {
        match self {
            Target::Triangle => AspectTriangle.eval(a, b),
            Target::Model(m) => lhv_correlation_exact(m, a, b),
        }
    }
}

fn load_model(path: &str) -> Result<LhvModel, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    LhvModel::from_json(&text).map_err(|e| CliError::Model(format!("{path}: {e}")))
}

fn target(c: &Common) -> Result<Target, CliError> {
    match c.model.as_deref() {
        None => Err(CliError::Usage("--model is required".into())),
        Some("aspect") => Ok(Target::Triangle),
        Some(path) => load_model(path).map(Target::Model),
    }
}

/// As [`target`], but the built-in resolves to its discretized mixture.
fn mixture(c: &Common) -> Result<LhvModel, CliError> {
    match target(c)? {
        Target::Triangle => Ok(aspect_model(c.atoms as usize)),
        Target::Model(m) => Ok(m),
    }
}

fn grid_pairs(c: &Common, default: Option<&str>) -> Result<Vec<(f64, f64)>, CliError> {
    let grid = match (&c.grid, default) {
        (Some(g), _) => g.clone(),
        (None, Some(d)) => crate::angles::parse_grid(d).expect("default grid"),
        (None, None) => return Err(CliError::Usage("--grid is required".into())),
    };
    grid.pairs(c.zip).map_err(CliError::Usage)
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn finish(mut w: Box<dyn Write>) -> Result<(), CliError> {
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), CliError> {
    let mut w = open_out(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    finish(w)
}

fn emit(
    c: &Common,
    path: Option<&Path>,
    command: &str,
    parameters: BTreeMap<String, serde_json::Value>,
    table: Table,
    summary: BTreeMap<String, Cell>,
) -> Result<(), CliError> {
    match c.format {
        Format::Table => {
            let mut w = open_out(path)?;
            table.write_csv(&mut w)?;
            finish(w)
        }
        Format::Doc => write_json(
            path,
            &TableDocument {
                command: command.into(),
                parameters,
                table,
                summary,
            },
        ),
    }
}

fn params(pairs: &[(&str, serde_json::Value)]) -> BTreeMap<String, serde_json::Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn simulate(c: &Common) -> Result<(), CliError> {
    let seed = c
        .seed
        .ok_or_else(|| CliError::Usage("simulate needs --seed".into()))?;
    let n = c.n_runs.unwrap_or(DEFAULT_N_RUNS);
    let pairs = grid_pairs(c, None)?;
    let mut t = Table::new(&["alpha", "beta", "estimate", "standard_error", "n", "exact"]);
    let mut worst: f64 = 0.0;
    for (a, b) in pairs {
        let m = estimate_correlation(a, b, n, seed)?;
        let exact = singlet_correlation(m.alpha, m.beta);
        worst = worst.max((m.estimate - exact).abs());
        t.push(vec![
            m.alpha.into(),
            m.beta.into(),
            m.estimate.into(),
            m.standard_error.into(),
            m.n_runs.into(),
            exact.into(),
        ]);
    }
    eprintln!(
        "{} settings, n = {n}, largest |estimate - exact| = {worst:.6}",
        t.rows.len()
    );
    let summary = BTreeMap::from([("max_abs_error".to_string(), Cell::Num(worst))]);
    let p = params(&[("seed", json!(seed)), ("n_runs", json!(n))]);
    emit(c, c.out.as_deref(), "simulate", p, t, summary)
}

fn correlate(c: &Common) -> Result<(), CliError> {
    let target = target(c)?;
    let pairs = grid_pairs(c, Some(DEFAULT_GRID))?;
    let mut t = Table::new(&["alpha", "beta", "hv", "quantum", "difference"]);
    let mut gap: f64 = 0.0;
    for (a, b) in pairs {
        let (hv, q) = (target.eval(a, b), singlet_correlation(a, b));
        gap = gap.max((hv - q).abs());
        t.push(vec![
            a.into(),
            b.into(),
            hv.into(),
            q.into(),
            (hv - q).into(),
        ]);
    }
    eprintln!(
        "{}: sup |C_hv - C_q| over {} settings = {gap:.6}",
        target.label(),
        t.rows.len()
    );
    let summary = BTreeMap::from([("sup_gap".to_string(), Cell::Num(gap))]);
    let p = params(&[("model", json!(target.label()))]);
    emit(c, c.out.as_deref(), "correlate", p, t, summary)
}

fn builtin_spec(name: &str) -> Option<SimpleFunctionSpec> {
    match name {
        "fig2" => SimpleFunctionSpec::equal_intervals(8, Outcome::Plus).ok(),
        "square" => SimpleFunctionSpec::equal_intervals(2, Outcome::Plus).ok(),
        "constant" => Some(SimpleFunctionSpec::constant(Outcome::Plus)),
        _ => None,
    }
}

fn reconstruction_path(c: &Common, explicit: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = explicit {
        return Some(p.to_owned());
    }
    let out = c.out.as_deref()?;
    let stem = out
        .file_stem()
        .map_or("spectrum".into(), |s| s.to_string_lossy().into_owned());
    let ext = match c.format {
        Format::Table => "csv",
        Format::Doc => "json",
    };
    Some(out.with_file_name(format!("{stem}.reconstruction.{ext}")))
}

fn fourier(c: &Common, name: &str, reconstruction: Option<&Path>) -> Result<(), CliError> {
    let n = c.window;
    if let Some(spec) = builtin_spec(name) {
        let s = coefficients_simple(&spec, n);
        write_spectrum(c, name, &s)?;
        let largest = |parity: i64| {
            s.iter()
                .filter(|(k, _)| k.rem_euclid(2) == parity)
                .map(|(_, f)| f.norm())
                .fold(0.0, f64::max)
        };
        eprintln!(
            "{name}: N = {n}, energy = {:.6} (pi = {:.6}), largest |f_n| even n {:.6}, odd n {:.6}",
            s.energy(),
            PI,
            largest(0),
            largest(1)
        );
        match reconstruction_path(c, reconstruction) {
            Some(path) => write_reconstruction(c, name, &spec, &s, &path)?,
            None => eprintln!("reconstruction skipped: give --out or --reconstruction"),
        }
        return Ok(());
    }
    let (label, s) = match name {
        "quantum" => (
            "quantum".to_string(),
            coefficients_2d(&Singlet, n, resolution_2d(c, n))?,
        ),
        "aspect" => (
            "aspect".to_string(),
            coefficients_2d(&AspectTriangle, n, resolution_2d(c, n))?,
        ),
        path => {
            let model = load_model(path)?;
            let label = if model.description().is_empty() {
                path.to_string()
            } else {
                model.description().to_string()
            };
            (label, moment_matrix(&model, n).to_spectrum())
        }
    };
    eprintln!(
        "{label}: N = {n}, c(1,-1) = {:.6}{:+.6}i, off-diagonal fraction = {:.6}",
        s.get(1, -1).re,
        s.get(1, -1).im,
        s.off_diagonal_fraction()
    );
    write_spectrum_2d(c, &label, &s)
}

fn resolution_2d(c: &Common, n: usize) -> usize {
    c.resolution.map_or((8 * n).max(512), |r| r as usize)
}

fn write_spectrum(c: &Common, source: &str, s: &FourierSpectrum) -> Result<(), CliError> {
    match c.format {
        Format::Table => {
            let mut w = open_out(c.out.as_deref())?;
            s.write_table(&mut w)?;
            finish(w)
        }
        Format::Doc => write_json(c.out.as_deref(), &s.to_document(source)),
    }
}

fn write_spectrum_2d(c: &Common, source: &str, s: &Spectrum2D) -> Result<(), CliError> {
    match c.format {
        Format::Table => {
            let mut w = open_out(c.out.as_deref())?;
            s.write_table(&mut w)?;
            finish(w)
        }
        Format::Doc => write_json(c.out.as_deref(), &s.to_document(source)),
    }
}

fn write_reconstruction(
    c: &Common,
    name: &str,
    spec: &SimpleFunctionSpec,
    s: &FourierSpectrum,
    path: &Path,
) -> Result<(), CliError> {
    let points = c.resolution.unwrap_or(DEFAULT_RECONSTRUCTION_POINTS);
    let mut t = Table::new(&["theta", "f", "partial_sum"]);
    for i in 0..points {
        let theta = i as f64 * PI / points as f64;
        t.push(vec![
            theta.into(),
            spec.eval(theta).value().into(),
            partial_sum(s, theta)?.into(),
        ]);
    }
    let p = params(&[
        ("target", json!(name)),
        ("max_index", json!(s.max_index())),
        ("points", json!(points)),
    ]);
    emit(c, Some(path), "fourier", p, t, BTreeMap::new())?;
    eprintln!("reconstruction written to {}", path.display());
    Ok(())
}

fn theorem(c: &Common) -> Result<(), CliError> {
    let model = mixture(c)?;
    let r = incompatibility_report(&model, c.window)?;
    eprintln!(
        "{}: verdict {}, residual {:.6}, |M(1,-1)| = {:.6}",
        if r.description.is_empty() {
            "model"
        } else {
            &r.description
        },
        serde_json::to_value(r.verdict)?
            .as_str()
            .unwrap_or_default(),
        r.residual_inf,
        r.witnesses[0].value.norm()
    );
    match c.format {
        Format::Doc => write_json(c.out.as_deref(), &r),
        Format::Table => {
            let mut w = open_out(c.out.as_deref())?;
            report_table(&r).write_csv(&mut w)?;
            finish(w)
        }
    }
}

fn report_table(r: &IncompatibilityReport) -> Table {
    let verdict = serde_json::to_value(r.verdict)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned));
    let pairing = serde_json::to_value(r.pairing)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned));
    let mut t = Table::new(&["quantity", "value"]);
    t.push(vec!["verdict".into(), verdict.unwrap_or_default().into()]);
    t.push(vec!["pairing".into(), pairing.unwrap_or_default().into()]);
    t.push(vec!["max_index".into(), (r.max_index as i64).into()]);
    t.push(vec!["residual_inf".into(), r.residual_inf.into()]);
    t.push(vec!["parseval_total".into(), r.parseval_total.into()]);
    t.push(vec!["tolerance".into(), r.tolerance.into()]);
    for w in &r.witnesses {
        let key = format!("M({},{})", w.n, w.m);
        t.push(vec![format!("{key}.re").into(), w.value.re.into()]);
        t.push(vec![format!("{key}.im").into(), w.value.im.into()]);
        t.push(vec![format!("{key}.target").into(), w.target.re.into()]);
    }
    t
}

fn chsh(c: &Common, [a, a2, b, b2]: [f64; 4]) -> Result<(), CliError> {
    let mut t = Table::new(&["target", "a", "a_prime", "b", "b_prime", "s", "abs_s"]);
    let mut row = |label: String, s: f64| {
        eprintln!("{label} |S| = {:.6}", s.abs());
        t.push(vec![
            label.into(),
            a.into(),
            a2.into(),
            b.into(),
            b2.into(),
            s.into(),
            s.abs().into(),
        ]);
    };
    row("quantum".into(), chsh_score(&Singlet, a, a2, b, b2));
    if c.model.is_some() {
        let target = target(c)?;
        let s = match &target {
            Target::Triangle => chsh_score(&AspectTriangle, a, a2, b, b2),
            Target::Model(m) => chsh_score(m, a, a2, b, b2),
        };
        row(target.label(), s);
    }
    emit(
        c,
        c.out.as_deref(),
        "chsh",
        BTreeMap::new(),
        t,
        BTreeMap::new(),
    )
}

fn model(c: &Common, kind: &ModelKind) -> Result<(), CliError> {
    let m = match kind {
        ModelKind::Aspect => aspect_model(c.atoms as usize),
        ModelKind::Random {
            max_atoms,
            max_intervals,
            pairing,
        } => {
            let seed = c
                .seed
                .ok_or_else(|| CliError::Usage("model random needs --seed".into()))?;
            if *max_atoms == 0 || *max_intervals == 0 {
                return Err(CliError::Usage(
                    "--max-atoms and --max-intervals must be positive".into(),
                ));
            }
            let pairing = match pairing {
                PairingArg::Correlated => Pairing::Correlated,
                PairingArg::AntiCorrelated => Pairing::AntiCorrelated,
            };
            let mut rng = RandomStream::new(seed);
            LhvModel::random(&mut rng, *max_atoms, *max_intervals, pairing)
        }
    };
    let mut w = open_out(c.out.as_deref())?;
    writeln!(w, "{}", m.to_json())?;
    finish(w)
}
