//! Discriminant and approximant against τ, written as CSV.
//!
//! ```text
//! cargo run --release --example tau_sweep -- [h] [nu] [out.csv]
//! ```
use lame_hill::sweep::{sweep, write_csv, SweepSpec};
use lame_hill::IntegrationConfig;
use std::fs::File;

fn main() -> lame_hill::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let h = args.first().map_or(Ok(6.0), |s| s.parse()).expect("h must be a number");
    let nu = args.get(1).map_or(Ok(0.5), |s| s.parse()).expect("nu must be a number");
    let spec = SweepSpec { h, nu, tau_min: 0.5, tau_max: 8.0, steps: 151 };
    let rows = sweep(&spec, &IntegrationConfig::default())?;
    match args.get(2) {
        Some(path) => write_csv(&rows, File::create(path)?)?,
        None => write_csv(&rows, std::io::stdout().lock())?,
    }
    let worst = rows
        .iter()
        .filter(|r| r.tau >= 3.0)
        .filter_map(|r| Some((r.discriminant? - r.approx?).abs() / r.bound?))
        .fold(0.0, f64::max);
    eprintln!("max |D - approx| / bound over tau >= 3: {worst:.4}");
    Ok(())
}
