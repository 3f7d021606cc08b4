//! Command-line front end: configuration, subcommands and machine-readable outputs.
//!
//! Exit codes: 0 success, 1 property failure or numerical failure, 2 configuration
//! error, 3 blow-up halt.

mod config;
mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

pub use config::{
    step_count, DataSource, DispersionSection, InitialData, KernelSection, PhaseBoundarySection, PipelineSolve, RunConfig,
    SolveSection, StateValues,
};
pub use output::{resolve_out_dir, to_json, write_json, OUT_DIR_VAR, THREADS_VAR};

use crate::error::{Error, Result};
use crate::euler::{analyze_states, solve_states, PhaseBoundaryData};
use crate::kernel::{
    check_bound_c1, check_bound_c2, check_crucial_estimate, check_crucialsym, check_homogeneity, check_hunter,
    check_symmetry_conjugation, rescale_to_p, sample_pairs, BoundCertificate, KernelSpec, PairKernel, SampleRange,
    ZeroSumTriple,
};
use crate::spectral::{
    integrate_with, write_log_csv, write_spectrum_csv, EvolutionForm, FormTag, GalerkinBand, RunOutcome, SpectralState,
};
use crate::variational::{build_profile, scan_and_refine_root, scan_range, synthesize_kernel, LopatinskiiRoot};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BLOW_UP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "surfwave", version, about = "Surface-wave amplitude equations: kernels, dispersion, evolution")]
pub struct Cli {
    /// Output directory (overrides SURFWAVE_OUT_DIR and the config file).
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
    /// TOML run configuration.
    #[arg(long, short, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kernel certificates and tables.
    Kernel {
        #[command(subcommand)]
        action: KernelAction,
    },
    /// Surface-wave frequency, profile and coefficients (`[dispersion]`).
    Dispersion,
    /// Phase-boundary states, coefficients and kernel (`[phase_boundary]`).
    PhaseBoundary,
    /// Time integration of an amplitude equation (`[solve]`).
    Solve {
        #[arg(long)]
        dt: Option<f64>,
        #[arg(long)]
        s_end: Option<f64>,
        #[arg(long)]
        n_modes: Option<usize>,
    },
    /// Collects the JSON outputs of a directory into `report.json`.
    Report {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum KernelAction {
    /// Runs every applicable certificate; exits 1 if one fails.
    Check(KernelArgs),
    /// Writes `q(k, l)` on a square grid to `kernel_table.csv`.
    Table(KernelArgs),
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(long)]
    pub name: Option<String>,
    /// Comma-separated parameters, e.g. `2,0,-2,0`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Option<Vec<f64>>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Half-width of the table grid.
    #[arg(long)]
    pub range: Option<f64>,
    /// Points per axis of the table grid.
    #[arg(long)]
    pub points: Option<usize>,
}

/// Parses `args` (program name first) and runs; returns the process exit code.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: &Cli) -> i32 {
    configure_threads();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}

/// Exit code for an error that aborted a command.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Config(_)
        | Error::Io(_)
        | Error::Json(_)
        | Error::Csv(_)
        | Error::UnknownKernel(_)
        | Error::KernelParams { .. }
        | Error::VariationalData(_)
        | Error::PressureLaw(_) => EXIT_CONFIG,
        _ => EXIT_PROPERTY,
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_VAR).ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    let out_dir = || resolve_out_dir(cli.out_dir.as_deref(), cfg.out_dir.as_deref());
    match &cli.command {
        Command::Kernel { action: KernelAction::Check(args) } => cmd_kernel_check(&kernel_section(&cfg, args)?, &out_dir()?),
        Command::Kernel { action: KernelAction::Table(args) } => cmd_kernel_table(&kernel_section(&cfg, args)?, &out_dir()?),
        Command::Dispersion => {
            let section = cfg.dispersion.as_ref().ok_or_else(|| missing("dispersion"))?;
            cmd_dispersion(section, &out_dir()?)
        }
        Command::PhaseBoundary => {
            let section = cfg.phase_boundary.as_ref().ok_or_else(|| missing("phase_boundary"))?;
            cmd_phase_boundary(section, &out_dir()?)
        }
        Command::Solve { dt, s_end, n_modes } => {
            let mut section = cfg.solve.clone().ok_or_else(|| missing("solve"))?;
            section.dt = dt.unwrap_or(section.dt);
            section.s_end = s_end.unwrap_or(section.s_end);
            section.n_modes = n_modes.unwrap_or(section.n_modes);
            cmd_solve(&section, &out_dir()?)
        }
        Command::Report { dir } => {
            let dir = match dir {
                Some(d) => d.clone(),
                None => out_dir()?,
            };
            cmd_report(&dir)
        }
    }
}

fn missing(section: &str) -> Error {
    Error::Config(format!("configuration needs a [{section}] section (pass --config)"))
}

fn kernel_section(cfg: &RunConfig, args: &KernelArgs) -> Result<KernelSection> {
    let mut section = match (&cfg.kernel, &args.name) {
        (Some(k), _) => k.clone(),
        (None, Some(name)) => RunConfig::parse(&format!("[kernel]\nname = {name:?}\n"))?.kernel.expect("section parsed"),
        (None, None) => return Err(Error::Config("kernel name needed: pass --name or a [kernel] section".into())),
    };
    if let Some(name) = &args.name {
        section.name = name.clone();
    }
    if let Some(p) = &args.params {
        section.parameters = p.clone();
    }
    section.samples = args.samples.unwrap_or(section.samples);
    section.seed = args.seed.unwrap_or(section.seed);
    section.table_range = args.range.unwrap_or(section.table_range);
    section.table_points = args.points.unwrap_or(section.table_points);
    if section.samples == 0 {
        return Err(Error::Config("samples must be positive".into()));
    }
    Ok(section)
}

/// Largest sampled `|q|`.
fn pair_sup(q: &PairKernel, n: usize, seed: u64) -> f64 {
    sample_pairs(n, seed, SampleRange::default(), false)
        .iter()
        .map(|&(k, l)| q.eval_unchecked(k, l).norm())
        .fold(0.0, f64::max)
}

/// Certificates for a pair kernel: crucialsym, crucial (bounded by `2|gamma|` when
/// `gamma` is known).
pub fn certify_pair(q: &PairKernel, samples: usize, seed: u64) -> Vec<BoundCertificate> {
    let mut certs = vec![check_crucialsym(q, samples, seed)];
    let mut crucial = check_crucial_estimate(q, samples, seed.wrapping_add(1));
    if let Some(g) = q.gamma() {
        let bound = 2.0 * g.norm();
        if crucial.constant > bound * (1.0 + 1e-12) {
            crucial.passed = false;
        }
        crucial.detail = Some(format!("constant compared against 2|gamma| = {bound:.6e}"));
    }
    certs.push(crucial);
    certs
}

/// Every certificate applicable to the named kernel.
pub fn certify_kernel(spec: &KernelSpec, samples: usize, seed: u64) -> Result<Vec<BoundCertificate>> {
    let b = spec.trilinear()?;
    let mut certs = vec![check_symmetry_conjugation(&b, samples, seed)];
    if let Some(h) = check_homogeneity(&b, samples, seed.wrapping_add(10)) {
        certs.push(h);
    }
    if spec.is_pair() {
        let q = spec.pair()?;
        certs.extend(certify_pair(&q, samples, seed.wrapping_add(20)));
        if spec.name == "hiz-q" {
            certs.push(check_hunter(&q));
        }
        return Ok(certs);
    }
    match b.degree() {
        Some(1.0) => certs.push(check_bound_c1(&rescale_to_p(&b), samples, seed.wrapping_add(30))),
        Some(2.0) => {
            certs.push(check_bound_c2(&rescale_to_p(&b), samples, seed.wrapping_add(30)));
            let q = spec.pair()?;
            certs.extend(certify_pair(&q, samples, seed.wrapping_add(20)));
            certs.push(check_hunter(&q));
        }
        _ => {}
    }
    Ok(certs)
}

#[derive(Serialize)]
struct CertificateReport<'a> {
    kernel: &'a KernelSpec,
    samples: usize,
    seed: u64,
    passed: bool,
    certificates: &'a [BoundCertificate],
}

fn print_certificates(certs: &[BoundCertificate]) {
    for c in certs {
        let tag = serde_json::to_value(c.property).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        println!(
            "{:<20} {}  worst={:.6e} constant={:.6e}{}",
            tag,
            if c.passed { "PASS" } else { "FAIL" },
            c.worst_ratio,
            c.constant,
            c.detail.as_ref().map(|d| format!("  ({d})")).unwrap_or_default()
        );
    }
}

fn cmd_kernel_check(section: &KernelSection, out: &Path) -> Result<i32> {
    let spec = section.spec();
    let certs = certify_kernel(&spec, section.samples, section.seed)?;
    print_certificates(&certs);
    let passed = certs.iter().all(|c| c.passed);
    let report = CertificateReport { kernel: &spec, samples: section.samples, seed: section.seed, passed, certificates: &certs };
    write_json(&report, &out.join("certificates.json"))?;
    Ok(if passed { EXIT_OK } else { EXIT_PROPERTY })
}

#[derive(Serialize)]
struct TableRow {
    k: f64,
    l: f64,
    re: f64,
    im: f64,
    abs: f64,
}

/// `q(k, l)` for pair and degree-two kernels, `b(-k-l, k, l)` otherwise.
fn cmd_kernel_table(section: &KernelSection, out: &Path) -> Result<i32> {
    let spec = section.spec();
    let n = section.table_points.max(2);
    let r = section.table_range;
    if !(r > 0.0) {
        return Err(Error::Config(format!("table range must be positive, got {r}")));
    }
    let eval: Box<dyn Fn(f64, f64) -> Complex64> = match spec.pair() {
        Ok(q) => Box::new(move |k, l| q.eval(k, l).unwrap_or(Complex64::new(f64::NAN, f64::NAN))),
        Err(Error::NotDegreeTwo(_)) => {
            let b = spec.trilinear()?;
            println!("kernel `{}` has no degree-two reduction; tabulating b(-k-l, k, l)", spec.name);
            Box::new(move |k, l| b.try_eval(-k - l, k, l).unwrap_or(Complex64::new(f64::NAN, f64::NAN)))
        }
        Err(e) => return Err(e),
    };
    let path = out.join("kernel_table.csv");
    let mut w = csv::Writer::from_path(&path)?;
    for i in 0..n {
        let k = -r + 2.0 * r * i as f64 / (n - 1) as f64;
        for j in 0..n {
            let l = -r + 2.0 * r * j as f64 / (n - 1) as f64;
            let v = eval(k, l);
            w.serialize(TableRow { k, l, re: v.re, im: v.im, abs: v.norm() })?;
        }
    }
    w.flush()?;
    println!("wrote {}", path.display());
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ModeReport {
    omega: Complex64,
    coefficient: Complex64,
}

#[derive(Serialize)]
struct KernelSample {
    triple: [f64; 3],
    first: Complex64,
    second: Complex64,
}

#[derive(Serialize)]
struct VariationalReport {
    model: &'static str,
    nu: Vec<f64>,
    eta: Vec<f64>,
    eta_norm: f64,
    tau: f64,
    tau_over_eta: f64,
    band_limit: f64,
    roots: Vec<LopatinskiiRoot>,
    modes: Vec<ModeReport>,
    sign: f64,
    raw_norm: f64,
    kernel_samples: Vec<KernelSample>,
    certificates: Vec<BoundCertificate>,
}

#[derive(Serialize)]
struct EulerReport<'a> {
    model: &'static str,
    tau_over_eta: f64,
    max_mode_residual: f64,
    #[serde(flatten)]
    data: &'a PhaseBoundaryData,
}

#[derive(Serialize)]
struct ScanRow {
    tau: f64,
    re: f64,
    im: f64,
    abs: f64,
}

fn mode_residual(data: &PhaseBoundaryData) -> f64 {
    [-4.0, -1.0, -0.25, 0.0, 0.25, 1.0, 4.0].iter().map(|&z| data.mode_residual(z / data.eta_norm)).fold(0.0, f64::max)
}

fn cmd_dispersion(section: &DispersionSection, out: &Path) -> Result<i32> {
    match section {
        DispersionSection::Variational { data, nu, eta, grid, scan_csv } => {
            let data = data.build()?;
            let range = scan_range(&data, nu, eta)?;
            let scan = scan_and_refine_root(&data, nu, eta, range, *grid)?;
            if *scan_csv {
                let mut w = csv::Writer::from_path(out.join("delta_scan.csv"))?;
                for (t, d) in scan.tau_grid.iter().zip(&scan.det_values) {
                    w.serialize(ScanRow { tau: *t, re: d.re, im: d.im, abs: d.norm() })?;
                }
                w.flush()?;
            }
            let root = scan.roots[0].clone();
            if !root.simple {
                return Err(Error::NonSimpleSurfaceWave(root.derivative));
            }
            let profile = build_profile(&data, nu, eta, root.tau)?;
            let synth = synthesize_kernel(&data, &profile)?;
            let samples = [[1.0, 1.0, -2.0], [1.0, -3.0, 2.0], [0.5, 2.0, -2.5]];
            let kernel_samples = samples
                .iter()
                .map(|t| {
                    let z = ZeroSumTriple::new(t[0], t[1], t[2]).expect("fixed sample triples are valid");
                    KernelSample { triple: *t, first: synth.first(&z), second: synth.second(&z) }
                })
                .collect();
            let mut certificates = vec![check_symmetry_conjugation(&synth.kernel(), 500, 1)];
            certificates.extend(check_homogeneity(&synth.first_kernel(), 500, 2));
            certificates.extend(check_homogeneity(&synth.second_kernel(), 500, 3));
            let eta_norm = eta.iter().map(|x| x * x).sum::<f64>().sqrt();
            let report = VariationalReport {
                model: "variational",
                nu: nu.clone(),
                eta: eta.clone(),
                eta_norm,
                tau: root.tau,
                tau_over_eta: root.tau / eta_norm,
                band_limit: range.1,
                roots: scan.roots.clone(),
                modes: profile.modes.iter().map(|m| ModeReport { omega: m.omega, coefficient: m.coeff }).collect(),
                sign: profile.sign,
                raw_norm: profile.raw_norm,
                kernel_samples,
                certificates,
            };
            println!("tau/|eta| = {:.16e} (sign {:+})", report.tau_over_eta, report.sign);
            let passed = report.certificates.iter().all(|c| c.passed);
            write_json(&report, &out.join("dispersion.json"))?;
            Ok(if passed { EXIT_OK } else { EXIT_PROPERTY })
        }
        DispersionSection::Euler { eta_norm, states, law, rho_l, rho_r_guess } => {
            let states = match (states, law, rho_l) {
                (Some(s), None, None) => s.build()?,
                (None, Some(law), Some(rho_l)) => solve_states(law.build()?.as_ref(), *rho_l, *rho_r_guess)?,
                _ => {
                    return Err(Error::Config(
                        "euler dispersion needs either `states` or both `law` and `rho_l`".into(),
                    ))
                }
            };
            let data = analyze_states(&states, *eta_norm)?;
            let report = EulerReport { model: "euler", tau_over_eta: data.tau / data.eta_norm, max_mode_residual: mode_residual(&data), data: &data };
            println!("tau/|eta| = {:.16e}, gamma = {:.6e}{:+.6e}i", report.tau_over_eta, data.gamma.re, data.gamma.im);
            write_json(&report, &out.join("dispersion.json"))?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct RunSummary {
    form: FormTag,
    kernel: String,
    sign: f64,
    n_modes: usize,
    dt: f64,
    steps: usize,
    steps_taken: usize,
    s_end: f64,
    final_time: f64,
    band: GalerkinBand,
    halted_reason: Option<String>,
    m_relative_drift: f64,
    t_drift: f64,
    final_m: f64,
    final_t: f64,
    final_l2: f64,
    final_hsigma: f64,
}

/// Runs the integration and writes `conservation.csv`, `spectrum.csv` (of `w`) and `summary.json`.
fn run_and_write(
    form: &EvolutionForm,
    w0: &SpectralState,
    dt: f64,
    s_end: f64,
    log_every: usize,
    band: GalerkinBand,
    out: &Path,
) -> Result<(RunSummary, i32)> {
    let steps = step_count(dt, s_end)?;
    if log_every == 0 {
        return Err(Error::Config("log_every must be positive".into()));
    }
    let state0 = form.tag().from_w(w0);
    let RunOutcome { state, log, steps_taken, halted } = integrate_with(form, &state0, dt, steps, log_every, band)?;
    write_log_csv(&log, out.join("conservation.csv"))?;
    write_spectrum_csv(&form.tag().to_w(&state), out.join("spectrum.csv"))?;
    let last = log.len() - 1;
    let summary = RunSummary {
        form: form.tag(),
        kernel: form.kernel_name(),
        sign: form.sign(),
        n_modes: w0.n_modes(),
        dt,
        steps,
        steps_taken,
        s_end,
        final_time: log.times[last],
        band,
        halted_reason: halted.clone(),
        m_relative_drift: log.relative_m_drift(),
        t_drift: log.t_drift(),
        final_m: log.m_values[last],
        final_t: log.t_values[last],
        final_l2: log.l2_values[last],
        final_hsigma: log.hsigma_values[last],
    };
    write_json(&summary, &out.join("summary.json"))?;
    println!(
        "{:?} K={} steps={} M drift={:.3e} T drift={:.3e}{}",
        summary.form,
        summary.n_modes,
        steps_taken,
        summary.m_relative_drift,
        summary.t_drift,
        halted.as_ref().map(|h| format!("  halted: {h}")).unwrap_or_default()
    );
    let code = if halted.is_some() { EXIT_BLOW_UP } else { EXIT_OK };
    Ok((summary, code))
}

/// Builds the evolution form of a `[solve]` section.
pub fn build_form(section: &SolveSection) -> Result<EvolutionForm> {
    if section.sign != 1.0 && section.sign != -1.0 {
        return Err(Error::Config(format!("sign must be +1 or -1, got {}", section.sign)));
    }
    let sign = section.sign;
    Ok(match section.form {
        FormTag::W => EvolutionForm::W { kernel: section.kernel.trilinear()?, sign },
        FormTag::U => EvolutionForm::U { kernel: rescale_to_p(&section.kernel.trilinear()?), sign },
        FormTag::V => EvolutionForm::V { kernel: section.kernel.pair()?, sign },
    })
}

fn cmd_solve(section: &SolveSection, out: &Path) -> Result<i32> {
    let form = build_form(section)?;
    let w0 = section.initial.build(section.n_modes)?;
    let (_, code) = run_and_write(&form, &w0, section.dt, section.s_end, section.log_every, section.band, out)?;
    Ok(code)
}

#[derive(Serialize)]
struct PhaseBoundaryReport<'a> {
    law: String,
    tau_over_eta: f64,
    max_mode_residual: f64,
    #[serde(flatten)]
    data: &'a PhaseBoundaryData,
    gamma_abs: f64,
    q_sup_sampled: f64,
    certificates: Vec<BoundCertificate>,
    run: Option<RunSummary>,
}

fn cmd_phase_boundary(section: &PhaseBoundarySection, out: &Path) -> Result<i32> {
    let law = section.law.build()?;
    let states = solve_states(law.as_ref(), section.rho_l, section.rho_r_guess)?;
    let data = analyze_states(&states, section.eta_norm)?;
    let q = data.pair_kernel();
    let certificates = certify_pair(&q, section.samples, section.seed);
    print_certificates(&certificates);
    println!(
        "rho_r = {:.12}, j = {:.6e}, tau/|eta| = {:.12}, gamma = {:.6e}{:+.6e}i",
        states.rho_r,
        states.j,
        data.tau / data.eta_norm,
        data.gamma.re,
        data.gamma.im
    );
    let mut code = if certificates.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_PROPERTY };
    let run = match &section.solve {
        Some(s) => {
            // the amplitude equation reads w_s + d_y Q[w] = 0 in the V form
            let form = EvolutionForm::V { kernel: q.clone(), sign: -1.0 };
            let w0 = s.initial.build(s.n_modes)?;
            let (summary, run_code) = run_and_write(&form, &w0, s.dt, s.s_end, s.log_every, GalerkinBand::Full, out)?;
            code = code.max(run_code);
            Some(summary)
        }
        None => None,
    };
    let report = PhaseBoundaryReport {
        law: law.name(),
        tau_over_eta: data.tau / data.eta_norm,
        max_mode_residual: mode_residual(&data),
        data: &data,
        gamma_abs: data.gamma.norm(),
        q_sup_sampled: pair_sup(&q, section.samples, section.seed),
        certificates,
        run,
    };
    write_json(&report, &out.join("phase_boundary.json"))?;
    Ok(code)
}

const REPORT_INPUTS: [&str; 4] = ["certificates.json", "dispersion.json", "phase_boundary.json", "summary.json"];

fn cmd_report(dir: &Path) -> Result<i32> {
    let mut merged = serde_json::Map::new();
    for name in REPORT_INPUTS {
        let path = dir.join(name);
        if path.exists() {
            let value: Value = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
            merged.insert(name.trim_end_matches(".json").to_string(), value);
        }
    }
    let log = dir.join("conservation.csv");
    if log.exists() {
        let rows = csv::Reader::from_path(&log)?.records().count();
        merged.insert("conservation_rows".into(), Value::from(rows));
    }
    if merged.is_empty() {
        return Err(Error::Config(format!("no outputs found in {}", dir.display())));
    }
    for (key, value) in &merged {
        let status = value.get("passed").and_then(Value::as_bool).map(|p| if p { " passed" } else { " FAILED" });
        println!("{key}{}", status.unwrap_or(""));
    }
    write_json(&Value::Object(merged), &dir.join("report.json"))?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hiz_certificates_pass() {
        let certs = certify_kernel(&KernelSpec::new("hiz", vec![]), 2000, 1).unwrap();
        assert!(certs.iter().all(|c| c.passed), "{certs:?}");
        assert!(certs.iter().any(|c| c.property == crate::kernel::Property::HunterH));
    }

    #[test]
    fn error_codes() {
        assert_eq!(error_code(&Error::Config("x".into())), EXIT_CONFIG);
        assert_eq!(error_code(&Error::Supersonic("x".into())), EXIT_PROPERTY);
    }

    #[test]
    fn bad_params_are_config_errors() {
        assert_eq!(run_from_args(["surfwave", "kernel", "check", "--name", "austria", "--params", "2,x"]), EXIT_CONFIG);
    }
}
