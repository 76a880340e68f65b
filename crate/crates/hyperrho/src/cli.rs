//! Argument parsing and subcommand dispatch.
//!
//! Output is line-oriented `key=value` text (tab-separated tables for orbits and
//! sweeps). Exit status: 0 on success, 1 on computation or check failures, 2 on
//! usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperrho_core::alpha_normal::{certificate_from_eigenvector, classify};
use hyperrho_core::extremal::{family_sweep, min_rho_bicyclic, SweepOptions};
use hyperrho_core::mobius::{classify_orbit, iterate_direct, MobiusParams};
use hyperrho_core::spectral::{spectral_radius, SolverOptions};
use hyperrho_core::{build, Classification, Family, FamilySpec, OrbitPoint};

use crate::acceptance::{run_all, Suite};
use crate::io::{read_file, render, write_file};
use crate::parallel::Rayon;
use crate::report::sig12;

#[derive(Debug, Parser)]
#[command(name = "hyperrho", version, about = "Spectral radii of uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named family member and write it in the text format.
    Construct(ConstructArgs),
    /// Spectral radius of a hypergraph file.
    Rho(RhoArgs),
    /// Eigenvector certificate of a hypergraph file.
    Certificate(CertificateArgs),
    /// Orbits of x -> 1 - alpha/x, or tables of F0 / F0*.
    Mobius(MobiusArgs),
    /// Exhaustive sweep over one bicyclic family.
    Sweep(SweepArgs),
    /// Smallest spectral radius among bicyclic k-graphs with m edges.
    Extremal(ExtremalArgs),
    /// Run the acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// path, cycle, cycle-star, cycle-pendant-joint, C1, C2, C3 or power.
    #[arg(long)]
    pub family: String,
    /// Comma-separated integers, or edges like `0-1,1-2` for `power`.
    #[arg(long)]
    pub params: String,
    #[arg(long)]
    pub k: usize,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct CertificateArgs {
    pub file: PathBuf,
    /// Tolerance for the normality and consistency checks.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Table {
    F0,
    F0star,
}

#[derive(Debug, Args)]
pub struct MobiusArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<f64>,
    /// Number of steps; negative runs the inverse map.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, value_enum)]
    pub table: Option<Table>,
    /// Table range `LO..HI`.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
    #[arg(long, default_value_t = 0.1)]
    pub step: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "C1", alias = "c1")]
    C1,
    #[value(name = "C2", alias = "c2")]
    C2,
    #[value(name = "C3", alias = "c3")]
    C3,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::C1 => Family::C1,
            FamilyArg::C2 => Family::C2,
            FamilyArg::C3 => Family::C3,
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Emit JSON instead of a tab-separated table.
    #[arg(long)]
    pub json: bool,
    /// Refuse sweeps with more spectral solves than this.
    #[arg(long, default_value_t = hyperrho_core::extremal::DEFAULT_SWEEP_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    pub suite: Suite,
}

/// A bad argument combination or value that clap cannot catch on its own.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

/// Parses `--family` and `--params` into a spec.
pub fn parse_family(name: &str, params: &str) -> Result<FamilySpec> {
    let name = name.to_ascii_lowercase();
    if name == "power" {
        let mut edges = Vec::new();
        for pair in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((a, b)) = pair.split_once('-') else {
                return usage(format!("power edge `{pair}` must look like `u-v`"));
            };
            match (a.trim().parse(), b.trim().parse()) {
                (Ok(a), Ok(b)) => edges.push((a, b)),
                _ => return usage(format!("power edge `{pair}` must join two vertex ids")),
            }
        }
        return Ok(FamilySpec::PowerHypergraph(edges));
    }
    let mut nums = Vec::new();
    for tok in params.split(',').map(str::trim) {
        match tok.parse::<usize>() {
            Ok(v) => nums.push(v),
            Err(_) => return usage(format!("parameter `{tok}` is not a non-negative integer")),
        }
    }
    let spec = match (name.as_str(), nums.as_slice()) {
        ("path" | "loose-path", &[n]) => FamilySpec::LoosePath(n),
        ("cycle" | "loose-cycle", &[n]) => FamilySpec::LooseCycle(n),
        ("cycle-star", &[n]) => FamilySpec::CycleStar(n),
        ("cycle-pendant-joint", &[n]) => FamilySpec::CyclePendantJoint(n),
        ("c1", &[a, b, c]) => FamilySpec::C1(a, b, c),
        ("c2", &[a, b, c]) => FamilySpec::C2(a, b, c),
        ("c3", &[a, b]) => FamilySpec::C3(a, b),
        ("path" | "loose-path" | "cycle" | "loose-cycle" | "cycle-star" | "cycle-pendant-joint" | "c1" | "c2" | "c3", _) => {
            return usage(format!("wrong number of parameters for family `{name}`"))
        }
        _ => return usage(format!("unknown family `{name}`")),
    };
    Ok(spec)
}

fn parse_range(range: &str) -> Result<(f64, f64)> {
    let parsed = range
        .split_once("..")
        .and_then(|(lo, hi)| Some((lo.trim().parse::<f64>().ok()?, hi.trim().parse::<f64>().ok()?)));
    match parsed {
        Some((lo, hi)) if lo <= hi => Ok((lo, hi)),
        _ => usage(format!("range `{range}` must look like LO..HI with LO <= HI")),
    }
}

fn point(p: OrbitPoint) -> String {
    match p {
        OrbitPoint::Finite(x) => sig12(x),
        OrbitPoint::Pole => "pole".to_string(),
    }
}

fn construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<bool> {
    let spec = parse_family(&args.family, &args.params)?;
    let h = build(&spec, args.k).with_context(|| format!("building {spec} with k={}", args.k))?;
    match &args.out {
        Some(path) => write_file(path, &h)?,
        None => out.write_all(render(&h).as_bytes())?,
    }
    Ok(true)
}

fn rho(args: &RhoArgs, out: &mut dyn Write) -> Result<bool> {
    if !(args.tol > 0.0) {
        return usage("--tol must be positive");
    }
    let h = read_file(&args.file)?;
    let r = spectral_radius(&h, &SolverOptions::with_tol(args.tol))?;
    writeln!(out, "rho={}", sig12(r.rho))?;
    writeln!(out, "lower={}", sig12(r.lower_bound))?;
    writeln!(out, "upper={}", sig12(r.upper_bound))?;
    writeln!(out, "gap={}", sig12(r.gap()))?;
    writeln!(out, "iterations={}", r.iterations)?;
    writeln!(out, "alpha={}", sig12(r.alpha(h.k())))?;
    Ok(true)
}

fn certificate(args: &CertificateArgs, out: &mut dyn Write) -> Result<bool> {
    let h = read_file(&args.file)?;
    let r = spectral_radius(&h, &SolverOptions::default())?;
    let b = certificate_from_eigenvector(&h, &r)?;
    let report = classify(&h, &b, r.alpha(h.k()), args.tol)?;
    writeln!(out, "alpha={}", sig12(report.alpha))?;
    for (v, s) in report.vertex_sums.iter().enumerate() {
        writeln!(out, "vertex.{v}.sum={}", sig12(*s))?;
    }
    for (e, p) in report.edge_products.iter().enumerate() {
        writeln!(out, "edge.{e}.product={}", sig12(*p))?;
    }
    writeln!(out, "classification={}", report.classification.as_str())?;
    writeln!(out, "consistent={}", report.consistent)?;
    Ok(report.classification == Classification::AlphaNormal && report.consistent)
}

fn mobius(args: &MobiusArgs, out: &mut dyn Write) -> Result<bool> {
    let p = MobiusParams::new(args.alpha)?;
    match (args.x0, args.n, args.table, &args.range) {
        (Some(x0), Some(n), None, None) => {
            writeln!(out, "alpha={}", sig12(p.alpha))?;
            writeln!(out, "theta={}", sig12(p.theta))?;
            writeln!(out, "r1={}", sig12(p.r1))?;
            writeln!(out, "r2={}", sig12(p.r2))?;
            if let Ok(kind) = classify_orbit(args.alpha, x0) {
                writeln!(out, "kind={}", kind.as_str())?;
            }
            writeln!(out, "n\tx")?;
            let sign = if n < 0 { -1 } else { 1 };
            for (i, x) in iterate_direct(args.alpha, x0, n)?.into_iter().enumerate() {
                writeln!(out, "{}\t{}", sign * i as i64, point(x))?;
            }
        }
        (None, None, Some(table), Some(range)) => {
            let (lo, hi) = parse_range(range)?;
            if !(args.step > 0.0) {
                return usage("--step must be positive");
            }
            let (name, f): (&str, &dyn Fn(f64) -> f64) = match table {
                Table::F0 => ("f0", &|x| p.f0(x)),
                Table::F0star => ("f0star", &|x| p.f0_star(x)),
            };
            writeln!(out, "x\t{name}")?;
            let count = ((hi - lo) / args.step + 1e-9).floor() as usize;
            for i in 0..=count {
                let x = lo + i as f64 * args.step;
                writeln!(out, "{}\t{}", sig12(x), sig12(f(x)))?;
            }
        }
        _ => return usage("mobius takes either --x0 and --n, or --table and --range"),
    }
    Ok(true)
}

fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<bool> {
    let opts = SweepOptions { cap: args.cap, ..Default::default() };
    let rows = family_sweep(args.m, args.k, args.family.into(), &opts, &Rayon)?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
    } else {
        writeln!(out, "spec\trho\talpha\tconverged")?;
        for r in &rows {
            writeln!(out, "{}\t{}\t{}\t{}", r.spec, sig12(r.rho), sig12(r.alpha), r.converged)?;
        }
    }
    Ok(rows.iter().all(|r| r.converged))
}

fn extremal(args: &ExtremalArgs, out: &mut dyn Write) -> Result<bool> {
    let s = min_rho_bicyclic(args.m, args.k)?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&s)?)?;
        return Ok(true);
    }
    writeln!(out, "m={}", s.m)?;
    writeln!(out, "k={}", s.k)?;
    writeln!(out, "theta0={}", sig12(s.theta0))?;
    writeln!(out, "alpha={}", sig12(s.alpha))?;
    writeln!(out, "rho={}", sig12(s.rho))?;
    let names: Vec<String> = s.witnesses.iter().map(|w| w.to_string()).collect();
    writeln!(out, "witnesses={}", names.join(","))?;
    Ok(true)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let outcomes = run_all(args.suite);
    for o in &outcomes {
        writeln!(out, "{o}")?;
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(out, "passed={passed}/{}", outcomes.len())?;
    Ok(passed == outcomes.len())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Rho(a) => rho(a, out),
        Command::Certificate(a) => certificate(a, out),
        Command::Mobius(a) => mobius(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::Extremal(a) => extremal(a, out),
        Command::Verify(a) => verify(a, out),
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                2
            } else {
                1
            }
        }
    }
}
