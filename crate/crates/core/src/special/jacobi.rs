use crate::{Error, Result};

use super::Modulus;

const MAX_LEVELS: usize = 32;

/// Precomputed descending Landen (AGM) table for one modulus.
///
/// Building the table costs one AGM run; each evaluation then costs one
/// `sin` plus one `asin` per level.
#[derive(Debug, Clone)]
pub struct JacobiElliptic {
    modulus: Modulus,
    // c_n / a_n for n = 1..=N
    ratios: Vec<f64>,
    // 2^N a_N
    scale: f64,
}

impl JacobiElliptic {
    pub fn new(modulus: Modulus) -> Result<Self> {
        let mut ratios = Vec::new();
        let mut scale = 1.0;
        if modulus.k() != 0.0 && !modulus.is_unit() {
            let (mut a, mut b) = (1.0_f64, modulus.kprime());
            let mut c = modulus.k();
            let mut pow = 1.0;
            loop {
                if c <= f64::EPSILON * a {
                    break;
                }
                if ratios.len() == MAX_LEVELS {
                    return Err(Error::NonConvergence {
                        what: "Landen descent",
                        iterations: MAX_LEVELS,
                    });
                }
                let next = 0.5 * (a + b);
                b = (a * b).sqrt();
                c = c * c / (4.0 * next);
                a = next;
                pow *= 2.0;
                ratios.push(c / a);
            }
            scale = pow * a;
        }
        Ok(Self { modulus, ratios, scale })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// `(sn, cn, dn)` at real argument `t`.
    pub fn eval(&self, t: f64) -> (f64, f64, f64) {
        let m = self.modulus;
        if m.k() == 0.0 {
            let (s, c) = t.sin_cos();
            return (s, c, 1.0);
        }
        if m.is_unit() {
            let sech = 1.0 / t.cosh();
            return (t.tanh(), sech, sech);
        }
        let mut phi = self.scale * t;
        for &r in self.ratios.iter().rev() {
            phi = 0.5 * (phi + (r * phi.sin()).asin());
        }
        let (sn, cn) = phi.sin_cos();
        let kp = m.kprime();
        // dn² = k'² + k² cn², both terms non-negative
        let dn = (kp * kp + m.k2() * cn * cn).sqrt();
        (sn, cn, dn)
    }

    pub fn sn(&self, t: f64) -> f64 {
        self.eval(t).0
    }
}

/// Jacobi elliptic functions `(sn, cn, dn)` of real argument.
pub fn jacobi_sn_cn_dn(t: f64, m: Modulus) -> Result<(f64, f64, f64)> {
    Ok(JacobiElliptic::new(m)?.eval(t))
}
