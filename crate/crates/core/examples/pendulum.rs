//! Coupled pendula: stability of the antisymmetric mode against energy.
use lame_hill::{classify, map_pendulum, IntegrationConfig};

fn main() -> lame_hill::Result<()> {
    let gamma = 2.0;
    let cfg = IntegrationConfig::default();
    println!("gamma = {gamma}\n  energy      k          h          D            verdict");
    for energy in [4.0, 1.0, 0.25, 0.05, 0.01, 1e-3, 1e-4] {
        let p = map_pendulum(gamma, energy)?;
        let r = classify(&p, &cfg)?;
        println!(
            "  {energy:<9e}  {:.7}  {:.7}  {:+.9}  {}",
            p.modulus().k(),
            p.h(),
            r.discriminant,
            r.verdict
        );
    }
    Ok(())
}
