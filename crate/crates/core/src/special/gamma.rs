use std::f64::consts::PI;

use crate::{Error, Result};

use super::Complex;

// Lanczos g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `sin(πz)` with the real part reduced modulo 2 first, so that integer real
/// parts give an exactly zero real component.
pub fn sin_pi(z: Complex) -> Complex {
    let r = z.re - 2.0 * (0.5 * z.re).round();
    let (s, c) = (PI * r).sin_cos();
    let y = PI * z.im;
    // exact zeros at integers
    let (s, c) = if r == 0.0 {
        (0.0, 1.0)
    } else if r.abs() == 1.0 {
        (0.0, -1.0)
    } else if r.abs() == 0.5 {
        (r.signum(), 0.0)
    } else {
        (s, c)
    };
    Complex::new(s * y.cosh(), c * y.sinh())
}

/// Complex gamma function.
///
/// Lanczos approximation on `Re z >= 1/2`, reflection
/// `Γ(z) Γ(1-z) = π / sin(πz)` elsewhere.
pub fn complex_gamma(z: Complex) -> Result<Complex> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::PoleAtNonpositiveInteger(z.re));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("gamma({z})")));
    }
    if z.re < 0.5 {
        let one = Complex::new(1.0, 0.0);
        return Ok(Complex::new(PI, 0.0) / (sin_pi(z) * lanczos(one - z)));
    }
    Ok(lanczos(z))
}

fn lanczos(z: Complex) -> Complex {
    let z = z - 1.0;
    let mut series = Complex::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    ((z + 0.5) * t.ln() - t + LN_SQRT_2PI).exp() * series
}
