use crate::{Error, Result};

use super::Complex;

/// Hard cap on the number of series terms.
pub const SERIES_MAX_TERMS: usize = 20_000_000;

const SERIES_TOL: f64 = 1e-16;

/// Gauss hypergeometric function `₂F₁(a, b; c; x)` for real `0 <= x < 1`.
///
/// Direct power series summed with compensated addition. Summation stops
/// once a rigorous bound on the remaining tail drops below
/// `1e-16 · max(1, |partial sum|)`: for `m >= n > |c|` every term ratio obeys
///
/// ```text
/// |(a+m)(b+m) / ((c+m)(m+1))| x <= x (α+n)(β+n) / ((n-|c|)(n+1)) =: ρ
/// ```
///
/// with `α = max(|a|, 1)` and `β = |b|`, the right side being decreasing in
/// `n`; once `ρ < 1` the tail is at most `|t_n| ρ / (1 - ρ)`.
pub fn gauss_2f1(a: Complex, b: Complex, c: Complex, x: f64) -> Result<Complex> {
    if c.im == 0.0 && c.re <= 0.0 && c.re == c.re.round() {
        return Err(Error::InvalidArgument(format!(
            "2F1 lower parameter c = {c} is a non-positive integer"
        )));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::InvalidArgument(format!("2F1 argument x = {x} outside [0, 1)")));
    }
    if x >= 1.0 {
        return Err(Error::SeriesDivergence { x, terms: 0 });
    }
    if x == 0.0 {
        return Ok(Complex::new(1.0, 0.0));
    }

    let alpha = a.norm().max(1.0);
    let beta = b.norm();
    let gamma = c.norm();

    let mut sum = Complex::new(1.0, 0.0);
    let mut comp = Complex::new(0.0, 0.0);
    let mut term = Complex::new(1.0, 0.0);
    for n in 0..SERIES_MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        if term.re == 0.0 && term.im == 0.0 {
            return Ok(sum + comp);
        }
        neumaier(&mut sum, &mut comp, term);

        let m = nf + 1.0;
        if m > gamma {
            let rho = x * (alpha + m) * (beta + m) / ((m - gamma) * (m + 1.0));
            if rho < 1.0 {
                let tail = term.norm() * rho / (1.0 - rho);
                if tail <= SERIES_TOL * (sum + comp).norm().max(1.0) {
                    return Ok(sum + comp);
                }
            }
        }
    }
    Err(Error::SeriesDivergence { x, terms: SERIES_MAX_TERMS })
}

/// `d/dx ₂F₁(a, b; c; x) = (ab/c) ₂F₁(a+1, b+1; c+1; x)`.
pub fn gauss_2f1_derivative(a: Complex, b: Complex, c: Complex, x: f64) -> Result<Complex> {
    let one = Complex::new(1.0, 0.0);
    Ok(a * b / c * gauss_2f1(a + one, b + one, c + one, x)?)
}

fn neumaier(sum: &mut Complex, comp: &mut Complex, term: Complex) {
    fn step(s: &mut f64, c: &mut f64, x: f64) {
        let t = *s + x;
        if s.abs() >= x.abs() {
            *c += (*s - t) + x;
        } else {
            *c += (x - t) + *s;
        }
        *s = t;
    }
    step(&mut sum.re, &mut comp.re, term.re);
    step(&mut sum.im, &mut comp.im, term.im);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn at_zero() {
        assert_eq!(gauss_2f1(c(0.3, 1.0), c(2.0, -1.0), c(0.5, 0.0), 0.0).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn binomial_reduction() {
        // F(a, b; a; x) = (1 - x)^{-b}
        let b = c(0.7, -0.4);
        let got = gauss_2f1(c(1.25, 0.3), b, c(1.25, 0.3), 0.25).unwrap();
        let want = Complex::new(0.75, 0.0).powc(-b);
        assert!((got - want).norm() < 1e-15);
    }

    #[test]
    fn log_identity() {
        // F(1, 1; 2; x) = -ln(1 - x) / x
        for x in [0.1, 0.5, 0.9, 0.999] {
            let got = gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), x).unwrap();
            let want = -(-x).ln_1p() / x;
            assert!((got.re - want).abs() < 1e-12 * want, "x = {x}");
        }
    }

    #[test]
    fn terminating_series() {
        // F(-2, b; c; x) = 1 - 2bx/c + b(b+1)x²/(c(c+1))
        let (b, cc, x) = (c(1.5, 0.5), c(2.5, 0.0), 0.6);
        let got = gauss_2f1(c(-2.0, 0.0), b, cc, x).unwrap();
        let want = 1.0 - 2.0 * b * x / cc + b * (b + 1.0) * x * x / (cc * (cc + 1.0));
        assert!((got - want).norm() < 1e-15);
    }

    // mpmath.hyp2f1 at 50 digits
    #[test]
    fn against_high_precision() {
        let (a, b, cc) = (c(0.3, 1.2), c(-0.7, 0.4), c(1.5, 0.0));
        let near = gauss_2f1(a, b, cc, 0.9999).unwrap();
        assert!((near - c(0.68518914370560752910, -0.51320037810774054852)).norm() < 1e-11);
        let mid = gauss_2f1(a, b, cc, 0.5).unwrap();
        assert!((mid - c(0.79917001279997919744, -0.25643839844041144109)).norm() < 1e-14);
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let (a, b, cc) = (c(0.3, 1.2), c(-0.7, 0.4), c(1.5, 0.0));
        let x = 0.4;
        let h = 1e-5;
        let fd = (gauss_2f1(a, b, cc, x + h).unwrap() - gauss_2f1(a, b, cc, x - h).unwrap()) / (2.0 * h);
        let exact = gauss_2f1_derivative(a, b, cc, x).unwrap();
        assert!((fd - exact).norm() < 1e-9);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), 1.0),
            Err(Error::SeriesDivergence { .. })
        ));
        assert!(matches!(
            gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), 0.5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(gauss_2f1(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), -0.1).is_err());
    }
}
