//! The limiting equation `w'' + (h - ν(ν+1) tanh² t) w = 0`.
//!
//! Substituting `x = tanh t` turns it into an associated Legendre equation,
//! and its canonical solutions are
//!
//! ```text
//! w1(t) = Re[ cosh^μ t · F(-(μ+ν)/2, (1-μ+ν)/2; 1/2; tanh² t) ]
//! w2(t) = Re[ tanh t · cosh^μ t · F((1-μ-ν)/2, (2-μ+ν)/2; 3/2; tanh² t) ]
//! ```
//!
//! with `μ = iω`, `ω = sqrt(h - ν(ν+1))`. For large `t` they approach the
//! sinusoids `z_j(t) = Re(A_j e^{iωt})`.

use crate::bounds::{bound_constants, check_limit_preconditions};
use crate::lame::normalize_degree;
use crate::special::{complex_gamma, gauss_2f1, gauss_2f1_derivative, one_minus_tanh, Complex, Modulus};
use crate::{Error, Result};

/// Largest `t` accepted by the `tanh²` series; there `1 - tanh² t ≈ 2.5e-5`.
pub const T_MAX: f64 = 6.0;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Connection constants of the limiting solutions.
///
/// `ω A1 conj(A2) = -sin(νπ)/sinh(ωπ) + i` and `i ω A1 A2 = B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionConstants {
    pub a1: Complex,
    pub a2: Complex,
    pub omega: f64,
}

/// `w1, w1', w2, w2'` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitState {
    pub w1: f64,
    pub w1p: f64,
    pub w2: f64,
    pub w2p: f64,
}

/// Which quantity the large-`t` comparison bound refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitQuantity {
    /// `|w1(t) - z1(t)|`
    W1,
    /// `|w2'(t) - z2'(t)|`
    W2Prime,
}

pub(crate) fn omega_of(h: f64, nu: f64) -> Result<f64> {
    let threshold = nu * (nu + 1.0);
    if !(h > threshold) || !h.is_finite() {
        return Err(Error::OmegaUndefined { h, threshold });
    }
    Ok((h - threshold).sqrt())
}

/// The limiting equation for fixed `(h, ν)`.
#[derive(Debug, Clone, Copy)]
pub struct LimitEquation {
    nu: f64,
    omega: f64,
    mu: Complex,
}

impl LimitEquation {
    /// Requires `h > ν(ν+1)`.
    pub fn new(h: f64, nu: f64) -> Result<Self> {
        let nu = normalize_degree(nu);
        let omega = omega_of(h, nu)?;
        Ok(Self { nu, omega, mu: Complex::new(0.0, omega) })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    fn params1(&self) -> (Complex, Complex) {
        let (mu, nu) = (self.mu, self.nu);
        (-(mu + nu) * 0.5, (1.0 - mu + nu) * 0.5)
    }

    fn params2(&self) -> (Complex, Complex) {
        let (mu, nu) = (self.mu, self.nu);
        ((1.0 - mu - nu) * 0.5, (2.0 - mu + nu) * 0.5)
    }

    /// `w1, w1', w2, w2'` from the `tanh²` series, `|t| <= T_MAX`.
    ///
    /// Negative `t` uses parity: `w1` is even and `w2` is odd.
    pub fn state(&self, t: f64) -> Result<LimitState> {
        check_t(t.abs())?;
        if t < 0.0 {
            let s = self.state(-t)?;
            return Ok(LimitState { w1: s.w1, w1p: -s.w1p, w2: -s.w2, w2p: s.w2p });
        }
        let th = t.tanh();
        let x = th * th;
        let sech2 = sech(t).powi(2);
        let dx = 2.0 * th * sech2;
        let cosh_mu = (self.mu * ln_cosh(t)).exp();
        let mu = self.mu;

        let half = Complex::new(0.5, 0.0);
        let three_half = Complex::new(1.5, 0.0);
        let (a1, b1) = self.params1();
        let f1 = gauss_2f1(a1, b1, half, x)?;
        let df1 = gauss_2f1_derivative(a1, b1, half, x)?;
        let (a2, b2) = self.params2();
        let f2 = gauss_2f1(a2, b2, three_half, x)?;
        let df2 = gauss_2f1_derivative(a2, b2, three_half, x)?;

        let w1 = cosh_mu * f1;
        let w1p = cosh_mu * (mu * th * f1 + df1 * dx);
        let w2 = cosh_mu * th * f2;
        let w2p = cosh_mu * (sech2 * f2 + mu * x * f2 + th * dx * df2);
        Ok(LimitState { w1: w1.re, w1p: w1p.re, w2: w2.re, w2p: w2p.re })
    }

    /// `w1` and `w2` through the connection-formula representation
    /// `Re(v_j)`, a series in `cosh^{-2} t`; requires `t > 0` and converges
    /// fastest for large `t`.
    pub fn connection_form(&self, t: f64) -> Result<(f64, f64)> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::InvalidArgument(format!("connection form needs t > 0, got {t}")));
        }
        let c = self.connection_constants()?;
        let y = sech(t).powi(2);
        let lower = 1.0 - self.mu;
        let (a1, b1) = self.params1();
        let (a2, b2) = self.params2();
        // (2 cosh t)^μ
        let pow = (self.mu * (ln_cosh(t) + std::f64::consts::LN_2)).exp();
        let v1 = c.a1 * pow * gauss_2f1(a1, b1, lower, y)?;
        let v2 = c.a2 * t.tanh() * pow * gauss_2f1(a2, b2, lower, y)?;
        Ok((v1.re, v2.re))
    }

    pub fn connection_constants(&self) -> Result<ConnectionConstants> {
        let (mu, nu) = (self.mu, self.nu);
        let ln2 = std::f64::consts::LN_2;
        let g_mu = complex_gamma(mu)?;
        let a1 = ((1.0 - mu) * ln2).exp() * SQRT_PI * g_mu
            / (complex_gamma((1.0 + mu + nu) * 0.5)? * complex_gamma((mu - nu) * 0.5)?);
        let a2 = (-mu * ln2).exp() * SQRT_PI * g_mu
            / (complex_gamma((2.0 + mu + nu) * 0.5)? * complex_gamma((1.0 + mu - nu) * 0.5)?);
        Ok(ConnectionConstants { a1, a2, omega: self.omega })
    }
}

fn check_t(t: f64) -> Result<()> {
    if t.is_nan() {
        return Err(Error::InvalidArgument("limit solutions at t = NaN".into()));
    }
    if t > T_MAX {
        return Err(Error::SeriesDivergence { x: t.tanh().powi(2), terms: 0 });
    }
    Ok(())
}

fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

fn sech(t: f64) -> f64 {
    let e = (-t.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

pub fn w1(t: f64, h: f64, nu: f64) -> Result<f64> {
    Ok(LimitEquation::new(h, nu)?.state(t)?.w1)
}

pub fn w2(t: f64, h: f64, nu: f64) -> Result<f64> {
    Ok(LimitEquation::new(h, nu)?.state(t)?.w2)
}

pub fn connection_constants(h: f64, nu: f64) -> Result<ConnectionConstants> {
    LimitEquation::new(h, nu)?.connection_constants()
}

/// Which sinusoid `z_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    One,
    Two,
}

/// `z_j(t) = Re(A_j e^{iωt})`.
pub fn z_osc(t: f64, c: &ConnectionConstants, j: Branch) -> f64 {
    (amplitude(c, j) * Complex::from_polar(1.0, c.omega * t)).re
}

/// `z_j'(t) = Re(iω A_j e^{iωt})`.
pub fn z_osc_prime(t: f64, c: &ConnectionConstants, j: Branch) -> f64 {
    (Complex::new(0.0, c.omega) * amplitude(c, j) * Complex::from_polar(1.0, c.omega * t)).re
}

fn amplitude(c: &ConnectionConstants, j: Branch) -> Complex {
    match j {
        Branch::One => c.a1,
        Branch::Two => c.a2,
    }
}

/// Bound on the distance between a limiting solution and its sinusoid:
/// `ω^{-1} C1 |ν|(ν+1)(1 - tanh t)` for `w1`, `C2 |ν|(ν+1)(1 - tanh t)` for
/// `w2'`, constants formed at `k = 1`.
pub fn theorem2_bound(t: f64, h: f64, nu: f64, which: LimitQuantity) -> Result<f64> {
    let nu = normalize_degree(nu);
    check_limit_preconditions(h, nu)?;
    if !(t >= 0.0) {
        return Err(Error::PreconditionViolated(format!("requires t >= 0, got {t}")));
    }
    let omega = omega_of(h, nu)?;
    let c = bound_constants(h, nu, &Modulus::unit())?;
    let tail = nu.abs() * (nu + 1.0) * one_minus_tanh(t);
    Ok(match which {
        LimitQuantity::W1 => c.c1 * tail / omega,
        LimitQuantity::W2Prime => c.c2 * tail,
    })
}
