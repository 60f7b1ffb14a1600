//! Real and complex special-function kernels.
//!
//! Everything here is a pure function of its arguments. The elliptic
//! routines take a [`Modulus`] which stores the complementary modulus `k'`
//! directly, so that the regime `k -> 1` keeps full relative precision in
//! `k' = sqrt(1 - k²)`.

mod elliptic;
mod gamma;
mod hypergeometric;
mod jacobi;

pub use elliptic::{agm, ellip_e, ellip_k, one_minus_tanh, Modulus};
pub use gamma::{complex_gamma, sin_pi};
pub use hypergeometric::{gauss_2f1, gauss_2f1_derivative, SERIES_MAX_TERMS};
pub use jacobi::{jacobi_sn_cn_dn, JacobiElliptic};

/// Complex numbers used throughout the crate.
pub type Complex = num_complex::Complex64;
