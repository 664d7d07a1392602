//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on parse or precondition errors, 2 when
//! `verify` finds a violated invariant. All numeric output uses 17
//! significant digits; identical arguments (and seed) produce byte-identical
//! output.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use steklov_cli::config::{require, resolve, ConfigMap};
use steklov_cli::emit::{
    emit_modes, emit_records, emit_scan_trace, fmt17, OutputFormat, SweepContext,
};
use steklov_cli::verify::{render_json, render_text, run_all, Level};
use steklov_core::{
    default_d_grid, mode_ordering_check, newton_shell_residual, sigma1_concentric,
    solve_eccentric, sweep, Family, ModelSpace, MpsConfig, Quadrature1D, ShellGeometry,
};

#[derive(Parser)]
#[command(
    name = "steklov",
    about = "First mixed Steklov-Dirichlet eigenvalues of geodesic shells",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// First eigenvalue of the concentric shell.
    Sigma1(Sigma1Args),
    /// Eigenvalues of the angular modes on the concentric shell.
    Modes(ModesArgs),
    /// Displacement sweep of the off-center functionals.
    Sweep(SweepArgs),
    /// Force-balance residual of a shell acting on an interior point.
    Newton(NewtonArgs),
    /// Eccentric planar annulus eigenvalue by collocation.
    Mps(MpsArgs),
    /// Run the full property suite and report pass/fail per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SpaceArgs {
    /// Space family: euclidean, sphere, rp, cp, hp, op2, rh, ch, hh, oh2.
    #[arg(long)]
    space: Option<String>,
    /// Dimension parameter: real dimension for euclidean/sphere, the
    /// projective/hyperbolic rank otherwise (op2/oh2 fix it to 2).
    #[arg(long)]
    dim: Option<u32>,
}

impl SpaceArgs {
    fn build(&self, cfg: &ConfigMap) -> Result<ModelSpace, String> {
        let name: String = require(self.space.clone(), cfg, "space")?;
        let family = Family::from_cli_name(&name)
            .ok_or_else(|| format!("unknown space family {name:?}"))?;
        let dim = match resolve(self.dim, cfg, "dim")? {
            Some(d) => d,
            None if matches!(family, Family::OctonionicProjective | Family::OctonionicHyperbolic) => 2,
            None => return Err("missing required value for --dim".into()),
        };
        ModelSpace::new(family, dim).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct Sigma1Args {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long)]
    r1: Option<f64>,
    #[arg(long)]
    r2: Option<f64>,
    /// Relative quadrature tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ModesArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long)]
    r1: Option<f64>,
    #[arg(long)]
    r2: Option<f64>,
    /// Largest angular mode to include.
    #[arg(long)]
    lmax: Option<u32>,
    /// Fixed integration step for the mode equation.
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long)]
    r1: Option<f64>,
    #[arg(long)]
    r2: Option<f64>,
    /// Number of displacement grid points.
    #[arg(long)]
    steps: Option<usize>,
    /// Largest displacement; defaults to 0.95 (R2 - R1).
    #[arg(long)]
    dmax: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Emit a JSON array instead of CSV.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct NewtonArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long)]
    r2: Option<f64>,
    /// Distance of the interior point from the shell's center.
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct MpsArgs {
    #[arg(long)]
    r1: Option<f64>,
    #[arg(long)]
    r2: Option<f64>,
    /// Center displacement.
    #[arg(long)]
    d: Option<f64>,
    /// Harmonic basis order per center.
    #[arg(long)]
    basis: Option<usize>,
    /// Points in the coarse singular-value scan.
    #[arg(long)]
    scan: Option<usize>,
    /// Collocation points per basis function per boundary.
    #[arg(long)]
    colloc: Option<usize>,
    /// Write the scan trace as CSV to this path.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for the sampled checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Coarser grids (about 5 s instead of a minute).
    #[arg(long)]
    fast: bool,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigMap, String> {
    match path {
        Some(p) => ConfigMap::load(p),
        None => Ok(ConfigMap::default()),
    }
}

fn quad_with_tol(tol: Option<f64>) -> Result<Quadrature1D, String> {
    let mut cfg = Quadrature1D::default();
    if let Some(t) = tol {
        // The negated form also rejects NaN.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(t > 0.0) {
            return Err(format!("--tol must be positive, got {t}"));
        }
        cfg.rel_tol = t;
    }
    Ok(cfg)
}

/// Writes to the given path, or stdout when absent.
fn write_output(path: &Option<PathBuf>, contents: &[u8]) -> Result<(), String> {
    match path {
        Some(p) => {
            let mut f =
                File::create(p).map_err(|e| format!("cannot create {}: {e}", p.display()))?;
            f.write_all(contents)
                .map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => std::io::stdout()
            .write_all(contents)
            .map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Sigma1(args) => {
            let cfg = load_config(&args.config)?;
            let space = args.space.build(&cfg)?;
            let r1: f64 = require(args.r1, &cfg, "r1")?;
            let r2: f64 = require(args.r2, &cfg, "r2")?;
            let quad = quad_with_tol(resolve(args.tol, &cfg, "tol")?)?;
            let sigma = sigma1_concentric(space, r1, r2, &quad).map_err(|e| e.to_string())?;
            println!("{}", fmt17(sigma));
            Ok(ExitCode::SUCCESS)
        }
        Command::Modes(args) => {
            let cfg = load_config(&args.config)?;
            let space = args.space.build(&cfg)?;
            let r1: f64 = require(args.r1, &cfg, "r1")?;
            let r2: f64 = require(args.r2, &cfg, "r2")?;
            let lmax: u32 = require(args.lmax, &cfg, "lmax")?;
            let step = resolve(args.step, &cfg, "step")?;
            let (table, _) =
                mode_ordering_check(space, r1, r2, lmax, step).map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            emit_modes(&table, &mut buf).map_err(|e| e.to_string())?;
            write_output(&args.out, &buf)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep(args) => {
            let cfg = load_config(&args.config)?;
            let space = args.space.build(&cfg)?;
            let r1: f64 = require(args.r1, &cfg, "r1")?;
            let r2: f64 = require(args.r2, &cfg, "r2")?;
            let steps = resolve(args.steps, &cfg, "steps")?.unwrap_or(17);
            let quad = quad_with_tol(resolve(args.tol, &cfg, "tol")?)?;
            let geom = ShellGeometry::new(space, r1, r2, 0.0).map_err(|e| e.to_string())?;
            let d_values = match resolve(args.dmax, &cfg, "dmax")? {
                None => default_d_grid(&geom, steps),
                Some(dmax) => {
                    if !(dmax >= 0.0 && dmax + r1 < r2) {
                        return Err(format!("--dmax must satisfy 0 <= dmax < R2 - R1, got {dmax}"));
                    }
                    if steps <= 1 {
                        vec![dmax]
                    } else {
                        (0..steps)
                            .map(|i| dmax * i as f64 / (steps - 1) as f64)
                            .collect()
                    }
                }
            };
            let out = sweep(&geom, &d_values, &quad).map_err(|e| e.to_string())?;
            for (d, msg) in &out.failures {
                eprintln!("warning: displacement {d} failed: {msg}");
            }
            if out.records.is_empty() {
                return Err("every displacement failed".into());
            }
            let ctx = SweepContext {
                space: space.family().cli_name().to_string(),
                m: space.m(),
                k: space.k(),
                r1,
                r2,
                sigma1_concentric: out.sigma1_concentric,
            };
            let format = if args.json { OutputFormat::Json } else { OutputFormat::Csv };
            let mut buf = Vec::new();
            emit_records(&out.records, &ctx, format, &mut buf).map_err(|e| e.to_string())?;
            write_output(&args.out, &buf)?;
            eprintln!(
                "flags: denominator_increasing={} numerator_max_at_zero={} quotient_below_concentric={} quotient_monotone_observed={}",
                out.flags.denominator_increasing,
                out.flags.numerator_max_at_zero,
                out.flags.quotient_below_concentric,
                out.flags.quotient_monotone_observed
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Newton(args) => {
            let cfg = load_config(&args.config)?;
            let space = args.space.build(&cfg)?;
            let r2: f64 = require(args.r2, &cfg, "r2")?;
            let x: f64 = require(args.x, &cfg, "x")?;
            let quad = quad_with_tol(resolve(args.tol, &cfg, "tol")?)?;
            let residual = newton_shell_residual(space, r2, x, &quad).map_err(|e| e.to_string())?;
            println!("{}", fmt17(residual));
            Ok(ExitCode::SUCCESS)
        }
        Command::Mps(args) => {
            let cfg = load_config(&args.config)?;
            let r1: f64 = require(args.r1, &cfg, "r1")?;
            let r2: f64 = require(args.r2, &cfg, "r2")?;
            let d: f64 = require(args.d, &cfg, "d")?;
            let mut mps_cfg = MpsConfig::default();
            if let Some(basis) = resolve(args.basis, &cfg, "basis")? {
                mps_cfg.basis_order = basis;
            }
            if let Some(scan) = resolve(args.scan, &cfg, "scan")? {
                mps_cfg.scan_points = scan;
            }
            if let Some(colloc) = resolve(args.colloc, &cfg, "colloc")? {
                mps_cfg.collocation_factor = colloc;
            }
            let res = solve_eccentric(r1, r2, d, &mps_cfg).map_err(|e| e.to_string())?;
            if res.column_norm_ratio > 1e12 {
                eprintln!(
                    "warning: basis scaling ratio {:.3e} exceeds 1e12; results may be unreliable",
                    res.column_norm_ratio
                );
            }
            if let Some(trace_path) = &args.trace {
                let mut buf = Vec::new();
                emit_scan_trace(&res.scan_trace, &mut buf).map_err(|e| e.to_string())?;
                write_output(&Some(trace_path.clone()), &buf)?;
            }
            println!("{}", fmt17(res.sigma));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let cfg = load_config(&args.config)?;
            let seed = resolve(args.seed, &cfg, "seed")?.unwrap_or(42);
            let level = if args.fast { Level::Fast } else { Level::Full };
            let checks = run_all(seed, level);
            let report = if args.json {
                render_json(&checks, seed, level)
            } else {
                render_text(&checks, seed, level)
            };
            write_output(&args.out, report.as_bytes())?;
            if checks.iter().all(|c| c.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
    }
}
