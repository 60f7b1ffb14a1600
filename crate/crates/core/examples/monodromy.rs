//! Half-period fundamental matrix of a Lamé equation and the two
//! equivalent discriminant formulas.
use lame_hill::lame::{evaluate_discriminant, q_lame};
use lame_hill::ode::integrate_observed;
use lame_hill::{IntegrationConfig, LameParams, Modulus};

fn main() -> lame_hill::Result<()> {
    let p = LameParams::new(10.0, 1.0, Modulus::from_k(0.9)?)?;
    let cfg = IntegrationConfig::default();
    let e = evaluate_discriminant(&p, &cfg)?;
    let m = e.matrix;
    println!("[ y1  y2  ]   [{:+.12} {:+.12}]", m.y1, m.y2);
    println!("[ y1' y2' ] = [{:+.12} {:+.12}]", m.y1p, m.y2p);
    println!("det       = {:.15}", m.determinant());
    println!("2(2 y1 y2' - 1)        = {:+.12}", e.value);
    println!("2(y1 y2' + y1' y2)     = {:+.12}", e.symmetric);

    let mut steps = 0;
    let mut worst: f64 = 0.0;
    integrate_observed(|t| q_lame(t, &p), 0.0, p.ellip_k(), &cfg, |_, fm| {
        steps += 1;
        worst = worst.max((fm.determinant() - 1.0).abs());
    })?;
    println!("{steps} accepted steps, max |det - 1| along the path = {worst:.2e}");

    for tol in [1e-6, 1e-8, 1e-10, 1e-12] {
        let d = evaluate_discriminant(&p, &IntegrationConfig::with_rel_tol(tol))?.value;
        println!("rel_tol {tol:.0e}: D = {d:+.14}  (diff {:.1e})", (d - e.value).abs());
    }
    Ok(())
}
