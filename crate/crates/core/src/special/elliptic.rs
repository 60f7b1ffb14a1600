use std::f64::consts::FRAC_PI_2;

use crate::{Error, Result};

const AGM_MAX_ITER: usize = 64;

/// Elliptic modulus, stored as the pair `(k, k')` with `k² + k'² = 1`.
///
/// Constructors compute whichever of the two is not given without
/// subtractive cancellation. [`Modulus::unit`] is the degenerate limit
/// `k = 1`, where `sn` reduces to `tanh` and `K` is infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    kprime: f64,
}

impl Modulus {
    /// `0 <= k < 1`.
    pub fn from_k(k: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&k) {
            return Err(Error::InvalidModulus(format!("k = {k} outside [0, 1)")));
        }
        let kprime = ((1.0 - k) * (1.0 + k)).sqrt();
        Ok(Self { k, kprime })
    }

    /// `0 < k' <= 1`.
    pub fn from_kprime(kprime: f64) -> Result<Self> {
        if !(kprime > 0.0 && kprime <= 1.0) {
            return Err(Error::InvalidModulus(format!(
                "k' = {kprime} outside (0, 1]"
            )));
        }
        let k = ((1.0 - kprime) * (1.0 + kprime)).sqrt();
        Ok(Self { k, kprime })
    }

    /// `k = 1 - e^{-τ}` for `τ >= 0`, with `k'² = e^{-τ}(2 - e^{-τ})`.
    pub fn from_tau(tau: f64) -> Result<Self> {
        if !(tau >= 0.0 && tau.is_finite()) {
            return Err(Error::InvalidModulus(format!(
                "tau = {tau} must be finite and non-negative"
            )));
        }
        let e = (-tau).exp();
        let k = -(-tau).exp_m1();
        let kprime = (e * (2.0 - e)).sqrt();
        if kprime == 0.0 {
            return Err(Error::InvalidModulus(format!("tau = {tau} underflows k'")));
        }
        Ok(Self { k, kprime })
    }

    /// The limiting modulus `k = 1`, `k' = 0`.
    pub const fn unit() -> Self {
        Self { k: 1.0, kprime: 0.0 }
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn kprime(&self) -> f64 {
        self.kprime
    }

    pub fn k2(&self) -> f64 {
        self.k * self.k
    }

    pub fn is_unit(&self) -> bool {
        self.kprime == 0.0
    }

    /// `τ = -ln(1 - k)`, evaluated as `ln((1 + k) / k'²)`.
    pub fn tau(&self) -> f64 {
        if self.is_unit() {
            return f64::INFINITY;
        }
        ((1.0 + self.k) / (self.kprime * self.kprime)).ln()
    }
}

/// Arithmetic-geometric mean of two non-negative numbers.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a >= 0.0 && b >= 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidArgument(format!("agm({a}, {b})")));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            return Ok(0.5 * (a + b));
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Err(Error::NonConvergence { what: "AGM", iterations: AGM_MAX_ITER })
}

/// Complete elliptic integral of the first kind, `K(k) = π / (2 AGM(1, k'))`.
pub fn ellip_k(m: Modulus) -> Result<f64> {
    if m.is_unit() {
        return Ok(f64::INFINITY);
    }
    Ok(FRAC_PI_2 / agm(1.0, m.kprime)?)
}

/// Complete elliptic integral of the second kind via the AGM companion sum
///
/// ```text
/// E = K (1 - Σ 2^{n-1} c_n²),   c_0 = k,  c_{n+1} = c_n² / (4 a_{n+1})
/// ```
pub fn ellip_e(m: Modulus) -> Result<f64> {
    if m.is_unit() {
        return Ok(1.0);
    }
    let (mut a, mut b) = (1.0_f64, m.kprime);
    let mut c = m.k;
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..AGM_MAX_ITER {
        if c <= f64::EPSILON * a {
            let k = FRAC_PI_2 / a;
            return Ok(k * (1.0 - sum));
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        c = c * c / (4.0 * next);
        a = next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    Err(Error::NonConvergence { what: "AGM (second kind)", iterations: AGM_MAX_ITER })
}

/// `1 - tanh x` without cancellation for large `x`.
pub fn one_minus_tanh(x: f64) -> f64 {
    if x == f64::INFINITY {
        return 0.0;
    }
    if x < 0.5 {
        return 1.0 - x.tanh();
    }
    let e = (-2.0 * x).exp();
    2.0 * e / (1.0 + e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zero_modulus() {
        let m = Modulus::from_k(0.0).unwrap();
        assert_eq!(m.kprime(), 1.0);
        assert!(rel(ellip_k(m).unwrap(), PI / 2.0) < 1e-15);
        assert!(rel(ellip_e(m).unwrap(), PI / 2.0) < 1e-15);
    }

    #[test]
    fn unit_modulus() {
        let m = Modulus::unit();
        assert_eq!(ellip_k(m).unwrap(), f64::INFINITY);
        assert_eq!(ellip_e(m).unwrap(), 1.0);
    }

    // mpmath ellipk / ellipe at 50 digits, m = k².
    #[test]
    fn against_high_precision() {
        let cases = [
            (Modulus::from_k(0.5).unwrap(), 1.6857503548125960429, 1.4674622093394271555),
            (Modulus::from_tau(2.0).unwrap(), 2.1523171622319186850, 1.2125382141223813485),
            (Modulus::from_tau(5.0).unwrap(), 3.5500019816444043772, 1.0205076121992833442),
            (Modulus::from_tau(8.0).unwrap(), 5.0404823768207358702, 1.0015230133075541804),
        ];
        for (m, k_ref, e_ref) in cases {
            assert!(rel(ellip_k(m).unwrap(), k_ref) < 1e-14, "K at k = {}", m.k());
            assert!(rel(ellip_e(m).unwrap(), e_ref) < 1e-13, "E at k = {}", m.k());
        }
    }

    #[test]
    fn tiny_kprime() {
        // K(k) = ln(4/k') + O(k'² ln k'); E(k) -> 1
        let m = Modulus::from_kprime(1e-8).unwrap();
        let k = ellip_k(m).unwrap();
        assert!((k - (4.0e8_f64).ln()).abs() < 1e-14);
        assert!((ellip_e(m).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn tau_construction() {
        let m = Modulus::from_tau(5.0).unwrap();
        assert!((m.k() - 0.993262053000914533).abs() < 1e-16);
        assert!((m.k2() + m.kprime() * m.kprime() - 1.0).abs() < 4.0 * f64::EPSILON);
        assert!((m.tau() - 5.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Modulus::from_k(1.0).is_err());
        assert!(Modulus::from_k(-0.1).is_err());
        assert!(Modulus::from_kprime(0.0).is_err());
        assert!(Modulus::from_kprime(f64::NAN).is_err());
        assert!(Modulus::from_tau(-1.0).is_err());
        assert!(agm(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn tanh_complement() {
        for x in [0.0, 0.3, 0.5, 1.0, 5.0, 20.0] {
            let naive = 1.0 - f64::tanh(x);
            assert!((one_minus_tanh(x) - naive).abs() < 1e-15);
        }
        assert!(rel(one_minus_tanh(30.0), 2.0 * (-60.0_f64).exp()) < 1e-15);
    }
}
