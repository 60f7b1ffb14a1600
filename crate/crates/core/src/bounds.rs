//! A priori bounds for solutions of Lamé's equation and of Hill equations
//! with monotone coefficient.

use crate::special::{ellip_e, ellip_k, one_minus_tanh, Modulus};
use crate::{Error, Result};

/// Constants bounding `|y1|, |y1'|, |y2|, |y2'|` on `0 <= s <= t <= K`.
///
/// With `H = sqrt(h - ν(ν+1)k²)`:
///
/// | | `ν < 0` | `ν >= 0` |
/// |---|---|---|
/// | `c1` | 1 | `√h / H` |
/// | `c1p` | `H` | `√h` |
/// | `c2` | `1/√h` | `1/H` |
/// | `c2p` | `H/√h` | 1 |
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub big_h: f64,
    pub c1: f64,
    pub c1p: f64,
    pub c2: f64,
    pub c2p: f64,
}

/// Requires `h > 0` and `h > ν(ν+1)k²`. `Modulus::unit()` gives the
/// constants formed at `k = 1`.
pub fn bound_constants(h: f64, nu: f64, m: &Modulus) -> Result<BoundConstants> {
    let lambda = nu * (nu + 1.0);
    let q_end = h - lambda * m.k2();
    if !(h > 0.0) {
        return Err(Error::PreconditionViolated(format!("requires h > 0, got h = {h}")));
    }
    if !(q_end > 0.0) {
        return Err(Error::PreconditionViolated(format!(
            "requires h > nu(nu+1)k^2 = {}, got h = {h}",
            lambda * m.k2()
        )));
    }
    let big_h = q_end.sqrt();
    let sh = h.sqrt();
    Ok(if nu < 0.0 {
        BoundConstants { big_h, c1: 1.0, c1p: big_h, c2: 1.0 / sh, c2p: big_h / sh }
    } else {
        BoundConstants { big_h, c1: sh / big_h, c1p: sh, c2: 1.0 / big_h, c2p: 1.0 }
    })
}

/// Which endpoint quantity a perturbation bound refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointQuantity {
    /// `y1(K)`
    Y1,
    /// `y2'(K)`
    Y2Prime,
}

/// `E(k) - tanh K(k)`, the integrated distance between the `k` and `k = 1`
/// coefficients (up to the factor `|ν|(ν+1)`).
pub fn coefficient_gap(m: &Modulus) -> Result<f64> {
    let e = ellip_e(*m)?;
    let k = ellip_k(*m)?;
    Ok(((e - 1.0) + one_minus_tanh(k)).max(0.0))
}

/// Bound on `|y1(K; k) - w1(K)|` or `|y2'(K; k) - w2'(K)|`, where `w_j` solve
/// the `k = 1` equation with the same initial data.
///
/// Requires `h > 0` and `h > ν(ν+1)`; constants are formed at `k = 1`.
pub fn theorem1_bound(h: f64, nu: f64, m: &Modulus, which: EndpointQuantity) -> Result<f64> {
    check_limit_preconditions(h, nu)?;
    let c = bound_constants(h, nu, &Modulus::unit())?;
    let factor = match which {
        EndpointQuantity::Y1 => c.c1 * c.c2,
        EndpointQuantity::Y2Prime => c.c2 * c.c2p,
    };
    Ok(factor * nu.abs() * (nu + 1.0) * coefficient_gap(m)?)
}

pub(crate) fn check_limit_preconditions(h: f64, nu: f64) -> Result<()> {
    if !(h > 0.0) {
        return Err(Error::PreconditionViolated(format!("requires h > 0, got h = {h}")));
    }
    let lambda = nu * (nu + 1.0);
    if !(h > lambda) {
        return Err(Error::PreconditionViolated(format!(
            "requires h > nu(nu+1) = {lambda}, got h = {h}"
        )));
    }
    Ok(())
}

/// Monotonicity of a coefficient on the interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Nondecreasing,
    Nonincreasing,
}

/// Sup-norm envelopes of the canonical solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub y1: f64,
    pub y1p: f64,
    pub y2: f64,
    pub y2p: f64,
}

/// Envelopes for `y'' + q y = 0` with `q` monotone and `q_min <= q <= q_max`.
///
/// Nondecreasing: `(1, √M, 1/√m, √(M/m))`; nonincreasing:
/// `(√(M/m), √M, 1/√m, 1)`.
pub fn lemma2_envelope(q_min: f64, q_max: f64, direction: Monotonicity) -> Result<Envelope> {
    if !(q_min > 0.0) {
        return Err(Error::PreconditionViolated(format!(
            "coefficient minimum must be positive, got {q_min}"
        )));
    }
    if !(q_max >= q_min) || !q_max.is_finite() {
        return Err(Error::PreconditionViolated(format!(
            "need q_min <= q_max < inf, got [{q_min}, {q_max}]"
        )));
    }
    let (m, big_m) = (q_min, q_max);
    Ok(match direction {
        Monotonicity::Nondecreasing => Envelope {
            y1: 1.0,
            y1p: big_m.sqrt(),
            y2: 1.0 / m.sqrt(),
            y2p: (big_m / m).sqrt(),
        },
        Monotonicity::Nonincreasing => Envelope {
            y1: (big_m / m).sqrt(),
            y1p: big_m.sqrt(),
            y2: 1.0 / m.sqrt(),
            y2p: 1.0,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_zero_constants() {
        let c = bound_constants(3.0, 0.0, &Modulus::from_k(0.4).unwrap()).unwrap();
        assert!((c.big_h - 3.0_f64.sqrt()).abs() < 1e-15);
        assert!((c.c1 - 1.0).abs() < 1e-15);
        assert_eq!(c.c2p, 1.0);
    }

    #[test]
    fn worked_example_constants() {
        let c = bound_constants(6.0, 0.5, &Modulus::unit()).unwrap();
        assert!((c.big_h - 5.25_f64.sqrt()).abs() < 1e-15);
        assert!((c.c1 - (6.0_f64 / 5.25).sqrt()).abs() < 1e-15);
        assert!((c.c1p - 6.0_f64.sqrt()).abs() < 1e-15);
        assert!((c.c2 - 1.0 / 5.25_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn negative_branch() {
        let c = bound_constants(1.0, -0.25, &Modulus::unit()).unwrap();
        assert_eq!(c.c1, 1.0);
        assert!((c.c1p - (1.0_f64 + 3.0 / 16.0).sqrt()).abs() < 1e-15);
        assert_eq!(c.c2, 1.0);
        assert!((c.c2p - c.big_h).abs() < 1e-15);
    }

    #[test]
    fn constants_preconditions() {
        assert!(bound_constants(0.0, -0.25, &Modulus::unit()).is_err());
        assert!(bound_constants(2.0, 1.0, &Modulus::unit()).is_err());
        // h > ν(ν+1)k² can hold for k < 1 even when h < ν(ν+1)
        assert!(bound_constants(1.9, 1.0, &Modulus::from_k(0.5).unwrap()).is_ok());
    }

    #[test]
    fn envelopes() {
        let up = lemma2_envelope(1.0, 4.0, Monotonicity::Nondecreasing).unwrap();
        assert_eq!((up.y1, up.y1p, up.y2, up.y2p), (1.0, 2.0, 1.0, 2.0));
        let down = lemma2_envelope(1.0, 4.0, Monotonicity::Nonincreasing).unwrap();
        assert_eq!((down.y1, down.y1p, down.y2, down.y2p), (2.0, 2.0, 1.0, 1.0));
        for dir in [Monotonicity::Nondecreasing, Monotonicity::Nonincreasing] {
            let e = lemma2_envelope(6.25, 6.25, dir).unwrap();
            assert_eq!((e.y1, e.y1p, e.y2, e.y2p), (1.0, 2.5, 0.4, 1.0));
        }
        assert!(lemma2_envelope(0.0, 1.0, Monotonicity::Nondecreasing).is_err());
        assert!(lemma2_envelope(2.0, 1.0, Monotonicity::Nondecreasing).is_err());
    }

    #[test]
    fn theorem1_bound_limits() {
        let m = Modulus::from_tau(5.0).unwrap();
        assert_eq!(theorem1_bound(3.0, 0.0, &m, EndpointQuantity::Y1).unwrap(), 0.0);
        let far = Modulus::from_tau(10.0).unwrap();
        let near = theorem1_bound(6.0, 0.5, &far, EndpointQuantity::Y1).unwrap();
        let mid = theorem1_bound(6.0, 0.5, &m, EndpointQuantity::Y1).unwrap();
        assert!(near < 1e-3 && near < mid);
        assert!(theorem1_bound(1.0, 1.0, &m, EndpointQuantity::Y1).is_err());
    }

    #[test]
    fn theorem1_value() {
        // E, K at τ = 5 from mpmath: E - tanh K = 1.0205076121992833 - tanh(3.5500019816444044)
        let m = Modulus::from_tau(5.0).unwrap();
        let gap = 1.0205076121992833442 - 3.5500019816444043772_f64.tanh();
        let c1c2 = (6.0_f64).sqrt() / 5.25;
        let want = c1c2 * 0.75 * gap;
        let got = theorem1_bound(6.0, 0.5, &m, EndpointQuantity::Y1).unwrap();
        assert!((got - want).abs() < 1e-13 * want);
    }
}
