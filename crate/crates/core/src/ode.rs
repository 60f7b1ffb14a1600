//! Fundamental matrix of `u'' + q(t) u = 0`.
//!
//! Both canonical solutions are advanced together as one 4-component
//! system `[y1, y1', y2, y2']`, so every stage needs a single evaluation of
//! `q`. Steps come from the Dormand–Prince 5(4) pair with a PI step-size
//! controller; the fifth-order solution is propagated.

use crate::{Error, Result};

/// Integration tolerances and step budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-11, abs_tol: 1e-13, max_steps: 1_000_000 }
    }
}

impl IntegrationConfig {
    /// Default absolute tolerance and step cap with the given relative tolerance.
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self { rel_tol, abs_tol: (rel_tol * 1e-2).max(f64::MIN_POSITIVE), ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerances must be positive (rel_tol = {}, abs_tol = {})",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidArgument("max_steps must be at least 1".into()));
        }
        Ok(())
    }
}

/// Values of the canonical solutions at the right endpoint.
///
/// Initial data at the left endpoint: `y1 = y2' = 1`, `y1' = y2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalMatrix {
    pub y1: f64,
    pub y1p: f64,
    pub y2: f64,
    pub y2p: f64,
}

impl FundamentalMatrix {
    pub const IDENTITY: Self = Self { y1: 1.0, y1p: 0.0, y2: 0.0, y2p: 1.0 };

    /// Wronskian `y1 y2' - y1' y2`; exactly 1 for the true solution.
    pub fn determinant(&self) -> f64 {
        self.y1 * self.y2p - self.y1p * self.y2
    }

    pub fn trace(&self) -> f64 {
        self.y1 + self.y2p
    }

    fn from_state(s: &State) -> Self {
        Self { y1: s[0], y1p: s[1], y2: s[2], y2p: s[3] }
    }
}

type State = [f64; 4];

// Dormand–Prince 5(4) tableau
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth-order minus fourth-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;
const BETA: f64 = 0.04;
const ALPHA: f64 = 0.2 - 0.75 * BETA;

fn rhs(q: f64, y: &State) -> State {
    [y[1], -q * y[0], y[3], -q * y[2]]
}

fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..4 {
            out[i] += h * c * k[i];
        }
    }
    out
}

/// Fundamental matrix of `y'' + q(t) y = 0` at `b`, starting from the
/// identity at `a`.
pub fn fundamental_matrix<Q>(q: Q, a: f64, b: f64, cfg: &IntegrationConfig) -> Result<FundamentalMatrix>
where
    Q: FnMut(f64) -> f64,
{
    integrate_observed(q, a, b, cfg, |_, _| {})
}

/// As [`fundamental_matrix`], calling `observer(t, m)` at `a` and after every
/// accepted step.
pub fn integrate_observed<Q, O>(
    mut q: Q,
    a: f64,
    b: f64,
    cfg: &IntegrationConfig,
    mut observer: O,
) -> Result<FundamentalMatrix>
where
    Q: FnMut(f64) -> f64,
    O: FnMut(f64, &FundamentalMatrix),
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || !(a < b) {
        return Err(Error::InvalidArgument(format!("interval [{a}, {b}] must be finite with a < b")));
    }

    let mut t = a;
    let mut y: State = [1.0, 0.0, 0.0, 1.0];
    observer(t, &FundamentalMatrix::from_state(&y));

    let span = b - a;
    let mut k1 = rhs(q(t), &y);
    let mut h = initial_step(&y, &k1, span, cfg);
    let mut err_prev: f64 = 1e-4;
    let mut rejected_last = false;

    for _ in 0..cfg.max_steps {
        let last = t + h >= b;
        if last {
            h = b - t;
        }
        let k2 = rhs(q(t + C2 * h), &axpy(&y, h, &[(A21, &k1)]));
        let k3 = rhs(q(t + C3 * h), &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs(q(t + C4 * h), &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = rhs(
            q(t + C5 * h),
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let t_new = if last { b } else { t + h };
        let k6 = rhs(
            q(t_new),
            &axpy(&y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
        );
        let y_new = axpy(&y, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let k7 = rhs(q(t_new), &y_new);

        let mut err = 0.0;
        for i in 0..4 {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = cfg.abs_tol + cfg.rel_tol * y[i].abs().max(y_new[i].abs());
            err += (e / sc) * (e / sc);
        }
        let err = (err / 4.0).sqrt();
        if !err.is_finite() {
            return Err(Error::ToleranceUnachievable { t, step: h });
        }

        if err <= 1.0 {
            let err_acc = err.max(1e-10);
            let mut fac = SAFETY * err_acc.powf(-ALPHA) * err_prev.powf(BETA);
            fac = fac.clamp(FAC_MIN, FAC_MAX);
            if rejected_last {
                fac = fac.min(1.0);
            }
            err_prev = err_acc;
            rejected_last = false;

            t = t_new;
            y = y_new;
            k1 = k7;
            observer(t, &FundamentalMatrix::from_state(&y));
            if last {
                return Ok(FundamentalMatrix::from_state(&y));
            }
            h *= fac;
        } else {
            let fac = (SAFETY * err.powf(-ALPHA)).clamp(FAC_MIN, 1.0);
            h *= fac;
            rejected_last = true;
        }
        if h.abs() <= 16.0 * f64::EPSILON * t.abs().max(span) {
            return Err(Error::ToleranceUnachievable { t, step: h });
        }
    }
    Err(Error::StepLimitExceeded { t, steps: cfg.max_steps })
}

fn initial_step(y: &State, f: &State, span: f64, cfg: &IntegrationConfig) -> f64 {
    let mut d0 = 0.0;
    let mut d1 = 0.0;
    for i in 0..4 {
        let sc = cfg.abs_tol + cfg.rel_tol * y[i].abs();
        d0 += (y[i] / sc).powi(2);
        d1 += (f[i] / sc).powi(2);
    }
    let h = if d0 < 1e-10 || d1 < 1e-10 { 1e-6 } else { 0.01 * (d0 / d1).sqrt() };
    (h * cfg.rel_tol.powf(0.2) * 10.0).min(span).max(1e-12 * span)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_particle() {
        let m = fundamental_matrix(|_| 0.0, 0.0, 1.0, &IntegrationConfig::default()).unwrap();
        assert!((m.y1 - 1.0).abs() < 1e-14);
        assert!(m.y1p.abs() < 1e-14);
        assert!((m.y2 - 1.0).abs() < 1e-14);
        assert!((m.y2p - 1.0).abs() < 1e-14);
    }

    #[test]
    fn harmonic_oscillator() {
        let cfg = IntegrationConfig::default();
        for (omega, t) in [(1.0, 1.0), (2.5, 7.0), (0.3, 20.0)] {
            let m = fundamental_matrix(|_| omega * omega, 0.0, t, &cfg).unwrap();
            let (s, c) = (omega * t).sin_cos();
            assert!((m.y1 - c).abs() < 1e-9);
            assert!((m.y1p + omega * s).abs() < 1e-9);
            assert!((m.y2 - s / omega).abs() < 1e-9);
            assert!((m.y2p - c).abs() < 1e-9);
            assert!((m.determinant() - 1.0).abs() < 10.0 * cfg.rel_tol);
        }
    }

    #[test]
    fn shifted_interval() {
        let cfg = IntegrationConfig::default();
        let m = fundamental_matrix(|_| 4.0, 3.0, 4.0, &cfg).unwrap();
        assert!((m.y1 - 2.0_f64.cos()).abs() < 1e-10);
    }

    #[test]
    fn observer_sees_endpoints() {
        let cfg = IntegrationConfig::default();
        let mut ts = Vec::new();
        integrate_observed(|t| 1.0 + t, 0.0, 1.0, &cfg, |t, _| ts.push(t)).unwrap();
        assert_eq!(ts[0], 0.0);
        assert_eq!(*ts.last().unwrap(), 1.0);
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn step_limit() {
        let cfg = IntegrationConfig { max_steps: 3, ..Default::default() };
        let err = fundamental_matrix(|_| 100.0, 0.0, 50.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::StepLimitExceeded { .. }));
    }

    #[test]
    fn invalid_inputs() {
        let cfg = IntegrationConfig::default();
        assert!(fundamental_matrix(|_| 1.0, 1.0, 1.0, &cfg).is_err());
        assert!(fundamental_matrix(|_| 1.0, 0.0, f64::INFINITY, &cfg).is_err());
        let bad = IntegrationConfig { rel_tol: 0.0, ..cfg };
        assert!(fundamental_matrix(|_| 1.0, 0.0, 1.0, &bad).is_err());
    }

    #[test]
    fn singular_coefficient() {
        let cfg = IntegrationConfig::default();
        let err = fundamental_matrix(|t| 1.0 / (1.0 - t).powi(4), 0.0, 2.0, &cfg).unwrap_err();
        assert!(matches!(
            err,
            Error::ToleranceUnachievable { .. } | Error::StepLimitExceeded { .. }
        ));
    }
}
