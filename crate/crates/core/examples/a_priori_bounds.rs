//! Envelopes for equations with monotone coefficient, and the endpoint
//! comparison between modulus k < 1 and the limit k = 1.
use lame_hill::bounds::{bound_constants, lemma2_envelope, theorem1_bound, EndpointQuantity, Monotonicity};
use lame_hill::lame::half_period_matrix;
use lame_hill::legendre::LimitEquation;
use lame_hill::ode::integrate_observed;
use lame_hill::{IntegrationConfig, LameParams, Modulus};

fn main() -> lame_hill::Result<()> {
    let cfg = IntegrationConfig::default();
    let env = lemma2_envelope(1.0, 2.0, Monotonicity::Nondecreasing)?;
    let mut sup = [0.0_f64; 4];
    integrate_observed(|t| 1.0 + t, 0.0, 1.0, &cfg, |_, m| {
        for (s, v) in sup.iter_mut().zip([m.y1, m.y1p, m.y2, m.y2p]) {
            *s = s.max(v.abs());
        }
    })?;
    println!("q = 1 + t on [0, 1]");
    for (name, s, e) in [("y1", sup[0], env.y1), ("y1'", sup[1], env.y1p), ("y2", sup[2], env.y2), ("y2'", sup[3], env.y2p)] {
        println!("  sup|{name:<3}| = {s:.6}  <=  {e:.6}");
    }

    let (h, nu) = (6.0, 0.5);
    let eq = LimitEquation::new(h, nu)?;
    println!("\n tau   |y1 - w1|   bound      |y2' - w2'|  bound      (C1, C2)");
    for tau in [2.0, 3.0, 5.0, 8.0] {
        let m = Modulus::from_tau(tau)?;
        let p = LameParams::new(h, nu, m)?;
        let fm = half_period_matrix(&p, &cfg)?;
        let w = eq.state(p.ellip_k())?;
        let c = bound_constants(h, nu, &m)?;
        println!(
            "{tau:4.1}  {:.3e}   {:.3e}  {:.3e}    {:.3e}  ({:.3}, {:.3})",
            (fm.y1 - w.w1).abs(),
            theorem1_bound(h, nu, &m, EndpointQuantity::Y1)?,
            (fm.y2p - w.w2p).abs(),
            theorem1_bound(h, nu, &m, EndpointQuantity::Y2Prime)?,
            c.c1,
            c.c2
        );
    }
    Ok(())
}
