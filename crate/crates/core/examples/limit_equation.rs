//! Solutions of the k = 1 limit equation and their sinusoidal asymptotes.
use lame_hill::legendre::{theorem2_bound, z_osc, z_osc_prime, Branch, LimitEquation, LimitQuantity};

fn main() -> lame_hill::Result<()> {
    let (h, nu) = (6.0, 0.5);
    let eq = LimitEquation::new(h, nu)?;
    let c = eq.connection_constants()?;
    println!("omega = {:.12}", c.omega);
    println!("A1 = {:.12}", c.a1);
    println!("A2 = {:.12}\n", c.a2);
    println!("  t      w1          z1          |w1-z1|    bound      w2'         z2'         |w2'-z2'|  bound");
    for i in 1..=12 {
        let t = 0.5 * f64::from(i);
        let s = eq.state(t)?;
        let (z1, z2p) = (z_osc(t, &c, Branch::One), z_osc_prime(t, &c, Branch::Two));
        let b1 = theorem2_bound(t, h, nu, LimitQuantity::W1)?;
        let b2 = theorem2_bound(t, h, nu, LimitQuantity::W2Prime)?;
        println!(
            "{t:4.1}  {:+.7}  {z1:+.7}  {:.2e}   {b1:.2e}   {:+.7}  {z2p:+.7}  {:.2e}   {b2:.2e}",
            s.w1,
            (s.w1 - z1).abs(),
            s.w2p,
            (s.w2p - z2p).abs()
        );
    }
    Ok(())
}
