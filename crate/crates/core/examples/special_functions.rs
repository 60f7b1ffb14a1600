//! Tour of the special-function kernels.
use lame_hill::special::{
    agm, complex_gamma, ellip_e, ellip_k, gauss_2f1, jacobi_sn_cn_dn, one_minus_tanh, Complex, Modulus,
};

fn main() -> lame_hill::Result<()> {
    println!("agm(1, sqrt 2)     = {:.15}", agm(1.0, 2f64.sqrt())?);
    for kp in [0.5, 1e-3, 1e-9] {
        let m = Modulus::from_kprime(kp)?;
        println!("k' = {kp:<6e}  K = {:.15}  E = {:.15}", ellip_k(m)?, ellip_e(m)?);
    }

    let m = Modulus::from_k(0.5)?;
    println!("\n   t        sn                cn                dn");
    for t in [0.0, 0.5, 1.0, 1.5, 2.0] {
        let (sn, cn, dn) = jacobi_sn_cn_dn(t, m)?;
        println!("{t:5.2}  {sn:+.15}  {cn:+.15}  {dn:+.15}");
    }

    let z = Complex::new(0.5, 3.0);
    println!("\nGamma({z})    = {:.15}", complex_gamma(z)?);
    let f = gauss_2f1(Complex::new(0.25, 2.0), Complex::new(0.75, 2.0), Complex::new(1.0, 4.0), 0.999)?;
    println!("2F1(.., x=0.999)   = {f:.15}");
    println!("1 - tanh 20        = {:.15e}", one_minus_tanh(20.0));
    Ok(())
}
