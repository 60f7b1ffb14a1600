//! Command-line front end: `point`, `sweep` and `verify`.
//!
//! Exit codes: 0 on success, 1 on runtime failures (including failed
//! properties in `verify`), 2 on invalid input or violated preconditions.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::ode::IntegrationConfig;
use crate::sweep::{point_report, sweep, write_csv, ModulusSpec, PointReport, SweepSpec};
use crate::verify::{self, VerifyOptions};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "lame-hill", version, about = "Hill discriminant and stability of Lamé's equation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discriminant, approximant, error bound and verdict at one point.
    Point(PointArgs),
    /// CSV table over an evenly spaced τ grid, k = 1 - e^{-τ}.
    Sweep(SweepArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("modulus").required(true).args(["k", "kprime", "tau"])))]
pub struct PointArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub h: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: f64,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long)]
    pub kprime: Option<f64>,
    #[arg(long)]
    pub tau: Option<f64>,
    /// Relative integration tolerance.
    #[arg(long, default_value_t = 1e-11)]
    pub tol: f64,
    /// Emit a JSON object instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub h: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: f64,
    #[arg(long, default_value_t = 0.5)]
    pub tau_min: f64,
    #[arg(long, default_value_t = 8.0)]
    pub tau_max: f64,
    #[arg(long, default_value_t = 151)]
    pub steps: usize,
    #[arg(long, default_value_t = 1e-11)]
    pub tol: f64,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit JSON rows instead of CSV.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub density: usize,
    #[arg(long, default_value_t = 1e-11)]
    pub tol: f64,
    /// Emit the JSON summary instead of text.
    #[arg(long)]
    pub json: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OmegaUndefined { .. }
        | Error::PreconditionViolated(_)
        | Error::InvalidModulus(_)
        | Error::InvalidArgument(_)
        | Error::InvalidEnergy(_) => 2,
        _ => 1,
    }
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Point(a) => cmd_point(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Verify(a) => return cmd_verify(&a, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn config(tol: f64) -> crate::Result<IntegrationConfig> {
    let cfg = IntegrationConfig::with_rel_tol(tol);
    cfg.validate()?;
    Ok(cfg)
}

fn cmd_point(a: &PointArgs, out: &mut dyn Write) -> crate::Result<()> {
    let spec = match (a.k, a.kprime, a.tau) {
        (Some(k), None, None) => ModulusSpec::K(k),
        (None, Some(kp), None) => ModulusSpec::KPrime(kp),
        (None, None, Some(tau)) => ModulusSpec::Tau(tau),
        _ => return Err(Error::InvalidArgument("give exactly one of --k, --kprime, --tau".into())),
    };
    let report = point_report(a.h, a.nu, spec, &config(a.tol)?)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
    } else {
        write_point_text(&report, out)?;
    }
    Ok(())
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.15}")).unwrap_or_else(|| "-".into())
}

fn write_point_text(r: &PointReport, out: &mut dyn Write) -> std::io::Result<()> {
    let row = &r.row;
    writeln!(out, "h         {}", r.h)?;
    writeln!(out, "nu        {}", r.nu)?;
    writeln!(out, "tau       {:.15}", row.tau)?;
    writeln!(out, "k         {:.15}", row.k)?;
    writeln!(out, "kprime    {:.15e}", row.kprime)?;
    writeln!(out, "K         {:.15}", row.ellip_k)?;
    writeln!(out, "E         {:.15}", row.ellip_e)?;
    writeln!(out, "omega     {}", opt(row.omega))?;
    writeln!(out, "B         {:.15} {:+.15}i", r.b_re, r.b_im)?;
    writeln!(out, "amplitude {:.15}", r.amplitude)?;
    writeln!(out, "phase     {:.15}", r.phase)?;
    writeln!(out, "D         {}", opt(row.discriminant))?;
    writeln!(out, "approx    {}", opt(row.approx))?;
    writeln!(out, "bound     {}", opt(row.bound))?;
    writeln!(out, "verdict   {}", row.verdict)
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> crate::Result<()> {
    let spec = SweepSpec { h: a.h, nu: a.nu, tau_min: a.tau_min, tau_max: a.tau_max, steps: a.steps };
    let rows = sweep(&spec, &config(a.tol)?)?;
    let mut sink: Box<dyn Write + '_> = match &a.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(&mut *out),
    };
    if a.json {
        for row in &rows {
            writeln!(sink, "{}", serde_json::to_string(row).expect("row serializes"))?;
        }
        sink.flush()?;
    } else {
        write_csv(&rows, &mut sink)?;
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let integration = match config(a.tol) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let summary = verify::run(&VerifyOptions { seed: a.seed, grid_density: a.density, integration });
    let written = if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&summary).expect("summary serializes"))
    } else {
        summary.properties.iter().try_for_each(|p| {
            let status = if p.passed { "PASS" } else { "FAIL" };
            match &p.error {
                Some(e) => writeln!(out, "{status} {:<34} error: {e}", p.name),
                None => writeln!(out, "{status} {:<34} margin {:+.3e} ({} samples)", p.name, p.worst_margin, p.samples),
            }
        })
    };
    if written.is_err() {
        return 1;
    }
    if summary.passed {
        0
    } else {
        1
    }
}
