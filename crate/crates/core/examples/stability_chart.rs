//! Text stability chart over (τ, h) for fixed degree ν.
//!
//! `S`/`U` certified stable/unstable, `s`/`u` by integration only, `?` undetermined.
use lame_hill::{classify, IntegrationConfig, LameParams, Modulus, Verdict};
use rayon::prelude::*;

fn glyph(v: Verdict) -> char {
    match v {
        Verdict::ProvablyStable => 'S',
        Verdict::ProvablyUnstable => 'U',
        Verdict::NumericallyStable => 's',
        Verdict::NumericallyUnstable => 'u',
        Verdict::Undetermined => '?',
    }
}

fn main() -> lame_hill::Result<()> {
    let nu: f64 = std::env::args().nth(1).map_or(1.0, |s| s.parse().expect("nu must be a number"));
    let cfg = IntegrationConfig::default();
    let taus: Vec<f64> = (0..60).map(|i| 1.0 + 0.1 * f64::from(i)).collect();
    let lam = nu * (nu + 1.0);
    println!("nu = {nu}, tau from 1.0 (left) to 6.9 (right)");
    for j in (1..=24).rev() {
        let h = lam + 0.5 * f64::from(j);
        let line: lame_hill::Result<String> = taus
            .par_iter()
            .map(|&tau| {
                let p = LameParams::new(h, nu, Modulus::from_tau(tau)?)?;
                Ok(glyph(classify(&p, &cfg)?.verdict))
            })
            .collect();
        println!("h = {h:6.2} |{}", line?);
    }
    Ok(())
}
