//! Lamé's equation `y'' + (h - ν(ν+1) k² sn²(t, k)) y = 0` as a Hill
//! equation of period `2K(k)`.
//!
//! The discriminant is obtained from the fundamental matrix over one
//! half period, `D = 2(y1(K) y2'(K) + y1'(K) y2(K)) = 2(2 y1(K) y2'(K) - 1)`.
//! This module pairs it with the gamma-function approximant
//! `2 Re(B e^{2iωK})` and an explicit bound on their difference.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::legendre::omega_of;
use crate::ode::{fundamental_matrix, FundamentalMatrix, IntegrationConfig};
use crate::special::{complex_gamma, ellip_e, ellip_k, one_minus_tanh, Complex, JacobiElliptic, Modulus};
use crate::{Error, Result};

/// Absolute allowance for rounding in the approximant when certifying.
pub const CERTIFICATION_SLACK: f64 = 1e-10;

/// `ν` and `-1-ν` give the same equation; map to `ν >= -1/2`.
pub fn normalize_degree(nu: f64) -> f64 {
    if nu < -0.5 {
        -1.0 - nu
    } else {
        nu
    }
}

/// Validated `(h, ν, k)` with the elliptic data of the modulus cached.
#[derive(Debug, Clone)]
pub struct LameParams {
    h: f64,
    nu: f64,
    modulus: Modulus,
    quarter_period: f64,
    ellip_e: f64,
    jacobi: JacobiElliptic,
}

impl LameParams {
    /// `ν < -1/2` is replaced by `-1-ν`. The modulus must satisfy `k < 1`.
    pub fn new(h: f64, nu: f64, modulus: Modulus) -> Result<Self> {
        if !h.is_finite() {
            return Err(Error::InvalidArgument(format!("h = {h} must be finite")));
        }
        if !nu.is_finite() {
            return Err(Error::InvalidArgument(format!("nu = {nu} must be finite")));
        }
        if modulus.is_unit() {
            return Err(Error::InvalidModulus("k = 1 is not a periodic Lamé equation".into()));
        }
        Ok(Self {
            h,
            nu: normalize_degree(nu),
            modulus,
            quarter_period: ellip_k(modulus)?,
            ellip_e: ellip_e(modulus)?,
            jacobi: JacobiElliptic::new(modulus)?,
        })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// `K(k)`; the coefficient has period `2K`.
    pub fn ellip_k(&self) -> f64 {
        self.quarter_period
    }

    pub fn ellip_e(&self) -> f64 {
        self.ellip_e
    }

    /// `ν(ν+1)`
    pub fn lambda(&self) -> f64 {
        self.nu * (self.nu + 1.0)
    }
}

impl PartialEq for LameParams {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && self.nu == other.nu && self.modulus == other.modulus
    }
}

/// `h - ν(ν+1) k² sn²(t, k)`
pub fn q_lame(t: f64, p: &LameParams) -> f64 {
    let sn = p.jacobi.sn(t);
    p.h - p.lambda() * p.modulus.k2() * sn * sn
}

/// Fundamental matrix of Lamé's equation over `[0, K]`.
pub fn half_period_matrix(p: &LameParams, cfg: &IntegrationConfig) -> Result<FundamentalMatrix> {
    fundamental_matrix(|t| q_lame(t, p), 0.0, p.ellip_k(), cfg)
}

/// Discriminant together with the data it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminantEval {
    /// `2(2 y1 y2' - 1)`
    pub value: f64,
    /// `2(y1 y2' + y1' y2)`; differs from `value` by `2(1 - det)`.
    pub symmetric: f64,
    pub matrix: FundamentalMatrix,
}

pub fn evaluate_discriminant(p: &LameParams, cfg: &IntegrationConfig) -> Result<DiscriminantEval> {
    let m = half_period_matrix(p, cfg)?;
    Ok(DiscriminantEval {
        value: 2.0 * (2.0 * m.y1 * m.y2p - 1.0),
        symmetric: 2.0 * (m.y1 * m.y2p + m.y1p * m.y2),
        matrix: m,
    })
}

/// Hill discriminant `D(h, ν, k)` by numerical integration.
pub fn discriminant(p: &LameParams, cfg: &IntegrationConfig) -> Result<f64> {
    Ok(evaluate_discriminant(p, cfg)?.value)
}

/// `ω`, `B` and the polar form of `2B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticConstants {
    pub omega: f64,
    pub b: Complex,
    /// `2|B|`
    pub amplitude: f64,
    /// `arg B` in `(-π, π]`
    pub phase: f64,
}

/// `B = Γ(1+μ) Γ(μ) / (Γ(1+μ+ν) Γ(μ-ν))` with `μ = iω`, `ω² = h - ν(ν+1)`.
pub fn asymptotic_constants(h: f64, nu: f64) -> Result<AsymptoticConstants> {
    let nu = normalize_degree(nu);
    let omega = omega_of(h, nu)?;
    let mu = Complex::new(0.0, omega);
    let b = if nu == 0.0 {
        Complex::new(1.0, 0.0)
    } else {
        complex_gamma(1.0 + mu)? * complex_gamma(mu)?
            / (complex_gamma(1.0 + mu + nu)? * complex_gamma(mu - nu)?)
    };
    Ok(AsymptoticConstants { omega, b, amplitude: 2.0 * b.norm(), phase: b.arg() })
}

fn check_approx_preconditions(p: &LameParams) -> Result<()> {
    omega_of(p.h, p.nu)?;
    if !(p.h > 0.0) {
        return Err(Error::PreconditionViolated(format!("requires h > 0, got h = {}", p.h)));
    }
    Ok(())
}

/// `2 Re(B e^{2iωK(k)})`
pub fn approx_discriminant(p: &LameParams) -> Result<f64> {
    check_approx_preconditions(p)?;
    let c = asymptotic_constants(p.h, p.nu)?;
    Ok(approx_from_constants(&c, p.ellip_k()))
}

fn approx_from_constants(c: &AsymptoticConstants, quarter_period: f64) -> f64 {
    2.0 * (c.b * Complex::from_polar(1.0, 2.0 * c.omega * quarter_period)).re
}

/// Bound on `|D - 2 Re(B e^{2iωK})|`.
///
/// For `ν >= 0`, `h > ν(ν+1)`: `8 √h ω^{-2} ν(ν+1) G`; for `-1/2 <= ν < 0`,
/// `h > 0`: `8 ω h^{-1} |ν|(ν+1) G`; where `G = E(k) + 1 - 2 tanh K(k)`.
pub fn error_bound(p: &LameParams) -> Result<f64> {
    let (h, nu) = (p.h, p.nu);
    let gap = ((p.ellip_e() - 1.0) + 2.0 * one_minus_tanh(p.ellip_k())).max(0.0);
    let weight = nu.abs() * (nu + 1.0);
    if nu >= 0.0 {
        let omega = omega_of(h, nu).map_err(|_| {
            Error::PreconditionViolated(format!(
                "nu >= 0 requires h > nu(nu+1) = {}, got h = {h}",
                p.lambda()
            ))
        })?;
        Ok(8.0 * h.sqrt() / (omega * omega) * weight * gap)
    } else {
        if !(h > 0.0) {
            return Err(Error::PreconditionViolated(format!(
                "-1/2 <= nu < 0 requires h > 0, got h = {h}"
            )));
        }
        let omega = omega_of(h, nu)?;
        Ok(8.0 * omega / h * weight * gap)
    }
}

/// Stability verdict, strongest available evidence first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// `|approx| + bound < 2`.
    ProvablyStable,
    /// `|approx| - bound > 2`.
    ProvablyUnstable,
    /// `|D| < 2` by a margin of `100 rel_tol`.
    NumericallyStable,
    /// `|D| > 2` by a margin of `100 rel_tol`.
    NumericallyUnstable,
    /// `|D|` within the margin of 2.
    Undetermined,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::ProvablyStable,
        Verdict::ProvablyUnstable,
        Verdict::NumericallyStable,
        Verdict::NumericallyUnstable,
        Verdict::Undetermined,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ProvablyStable => "ProvablyStable",
            Verdict::ProvablyUnstable => "ProvablyUnstable",
            Verdict::NumericallyStable => "NumericallyStable",
            Verdict::NumericallyUnstable => "NumericallyUnstable",
            Verdict::Undetermined => "Undetermined",
        }
    }

    pub fn is_stable(&self) -> bool {
        matches!(self, Verdict::ProvablyStable | Verdict::NumericallyStable)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Verdict::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown verdict {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminantReport {
    pub discriminant: f64,
    pub symmetric: f64,
    pub matrix: FundamentalMatrix,
    pub approx: Option<f64>,
    pub bound: Option<f64>,
    pub constants: Option<AsymptoticConstants>,
    pub verdict: Verdict,
}

/// Decide stability from an approximant interval and a numerical discriminant.
pub fn decide(approx_and_bound: Option<(f64, f64)>, d: f64, margin: f64) -> Verdict {
    if let Some((approx, bound)) = approx_and_bound {
        if approx.abs() + bound + CERTIFICATION_SLACK < 2.0 {
            return Verdict::ProvablyStable;
        }
        if approx.abs() - bound - CERTIFICATION_SLACK > 2.0 {
            return Verdict::ProvablyUnstable;
        }
    }
    if d.abs() < 2.0 - margin {
        Verdict::NumericallyStable
    } else if d.abs() > 2.0 + margin {
        Verdict::NumericallyUnstable
    } else {
        Verdict::Undetermined
    }
}

/// Discriminant, approximant, bound and verdict.
///
/// The approximant and bound are only formed when their preconditions hold;
/// otherwise the verdict rests on the numerical discriminant alone.
pub fn classify(p: &LameParams, cfg: &IntegrationConfig) -> Result<DiscriminantReport> {
    let eval = evaluate_discriminant(p, cfg)?;
    let certified = match (approx_discriminant(p), error_bound(p)) {
        (Ok(a), Ok(b)) => Some((a, b)),
        _ => None,
    };
    let constants = asymptotic_constants(p.h, p.nu).ok();
    let verdict = decide(certified, eval.value, 100.0 * cfg.rel_tol);
    Ok(DiscriminantReport {
        discriminant: eval.value,
        symmetric: eval.symmetric,
        matrix: eval.matrix,
        approx: certified.map(|c| c.0),
        bound: certified.map(|c| c.1),
        constants,
        verdict,
    })
}

/// Lamé parameters of the antisymmetric mode of two coupled pendula:
/// `k² = 2/(E+2)`, `h = k²(2γ+1)`, `ν = 1`.
pub fn map_pendulum(gamma: f64, energy: f64) -> Result<LameParams> {
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(Error::InvalidEnergy(energy));
    }
    let kprime = (energy / (energy + 2.0)).sqrt();
    let modulus = Modulus::from_kprime(kprime)?;
    let k2 = 2.0 / (energy + 2.0);
    LameParams::new(k2 * (2.0 * gamma + 1.0), 1.0, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(h: f64, nu: f64, tau: f64) -> LameParams {
        LameParams::new(h, nu, Modulus::from_tau(tau).unwrap()).unwrap()
    }

    #[test]
    fn coefficient_special_points() {
        let p = params(6.0, 0.5, 5.0);
        assert_eq!(q_lame(0.0, &p), 6.0);
        let at_k = q_lame(p.ellip_k(), &p);
        assert!((at_k - (6.0 - 0.75 * p.modulus().k2())).abs() < 1e-13);
        let flat = params(3.0, 0.0, 2.0);
        assert_eq!(q_lame(1.234, &flat), 3.0);
    }

    #[test]
    fn coefficient_monotone() {
        for (nu, increasing) in [(0.5, false), (-0.25, true), (2.0, false)] {
            let p = params(6.0, nu, 3.0);
            let n = 50;
            let vals: Vec<f64> = (0..=n).map(|i| q_lame(p.ellip_k() * i as f64 / n as f64, &p)).collect();
            for w in vals.windows(2) {
                if increasing {
                    assert!(w[1] >= w[0] - 1e-14);
                } else {
                    assert!(w[1] <= w[0] + 1e-14);
                }
            }
        }
    }

    #[test]
    fn degree_normalization() {
        let a = params(6.0, -1.5, 5.0);
        let b = params(6.0, 0.5, 5.0);
        assert_eq!(a, b);
        assert_eq!(params(1.0, -0.25, 1.0).nu(), -0.25);
    }

    #[test]
    fn b_special_cases() {
        let c = asymptotic_constants(4.0, 0.0).unwrap();
        assert_eq!(c.b, Complex::new(1.0, 0.0));
        assert_eq!(c.omega, 2.0);
        let c = asymptotic_constants(10.0, 1.0).unwrap();
        let mu = Complex::new(0.0, c.omega);
        assert!((c.b - (mu - 1.0) / (mu + 1.0)).norm() < 1e-12);
        let c = asymptotic_constants(9.0, 2.0).unwrap();
        assert!((c.b.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn omega_gate() {
        assert!(matches!(asymptotic_constants(6.0, 2.0), Err(Error::OmegaUndefined { .. })));
        let p = params(1.0, 2.0, 5.0);
        assert!(matches!(approx_discriminant(&p), Err(Error::OmegaUndefined { .. })));
        assert!(matches!(error_bound(&p), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn negative_branch_needs_positive_h() {
        let p = params(-0.1, -0.25, 3.0);
        assert!(matches!(error_bound(&p), Err(Error::PreconditionViolated(_))));
        assert!(approx_discriminant(&p).is_err());
        assert!(error_bound(&params(0.5, -0.25, 3.0)).unwrap() > 0.0);
    }

    #[test]
    fn nu_zero_bound_vanishes() {
        assert_eq!(error_bound(&params(2.0, 0.0, 3.0)).unwrap(), 0.0);
    }

    #[test]
    fn polar_form() {
        let p = params(6.0, 0.5, 2.0);
        let c = asymptotic_constants(6.0, 0.5).unwrap();
        let polar = c.amplitude * (2.0 * c.omega * p.ellip_k() + c.phase).cos();
        assert!((approx_discriminant(&p).unwrap() - polar).abs() < 1e-12);
    }

    #[test]
    fn decide_hierarchy() {
        assert_eq!(decide(Some((-1.27, 0.07)), 5.0, 1e-9), Verdict::ProvablyStable);
        assert_eq!(decide(Some((2.5, 0.1)), 0.0, 1e-9), Verdict::ProvablyUnstable);
        assert_eq!(decide(Some((1.9, 0.2)), 1.5, 1e-9), Verdict::NumericallyStable);
        assert_eq!(decide(None, -2.5, 1e-9), Verdict::NumericallyUnstable);
        assert_eq!(decide(Some((-2.0, 0.0)), -2.0 + 1e-12, 1e-9), Verdict::Undetermined);
    }

    #[test]
    fn verdict_strings() {
        for v in Verdict::ALL {
            assert_eq!(v.as_str().parse::<Verdict>().unwrap(), v);
        }
        assert!("Stable".parse::<Verdict>().is_err());
    }

    #[test]
    fn pendulum_mapping() {
        let p = map_pendulum(0.5, 2.0).unwrap();
        assert!((p.modulus().k2() - 0.5).abs() < 1e-15);
        assert!((p.h() - 1.0).abs() < 1e-15);
        assert_eq!(p.nu(), 1.0);

        let gamma = 1.0;
        let p = map_pendulum(gamma, 0.1).unwrap();
        assert!((p.h() - 2.0 / 2.1 * 3.0).abs() < 1e-14);
        let tiny = map_pendulum(gamma, 1e-12).unwrap();
        assert!((tiny.h() - (2.0 * gamma + 1.0)).abs() < 1e-11);
        let w2 = tiny.h() - tiny.lambda();
        assert!((w2 - (2.0 * gamma - 1.0)).abs() < 1e-11);

        assert_eq!(map_pendulum(1.0, 0.0).unwrap_err(), Error::InvalidEnergy(0.0));
        assert!(map_pendulum(1.0, -1.0).is_err());
    }
}
