//! Stability of h = 6, ν = ½ at τ = 5, both certified and by integration.
use lame_hill::{classify, IntegrationConfig, LameParams, Modulus};

fn main() -> lame_hill::Result<()> {
    let p = LameParams::new(6.0, 0.5, Modulus::from_tau(5.0)?)?;
    let r = classify(&p, &IntegrationConfig::default())?;
    let c = r.constants.expect("h exceeds nu(nu+1)");
    println!("k          = {:.12}", p.modulus().k());
    println!("K, E       = {:.12}, {:.12}", p.ellip_k(), p.ellip_e());
    println!("B          = {:.12} {:+.12}i", c.b.re, c.b.im);
    println!("approx     = {:.12}", r.approx.unwrap());
    println!("bound      = {:.12}", r.bound.unwrap());
    println!("D          = {:.12}", r.discriminant);
    println!("det - 1    = {:.2e}", r.matrix.determinant() - 1.0);
    println!("verdict    = {}", r.verdict);
    Ok(())
}
