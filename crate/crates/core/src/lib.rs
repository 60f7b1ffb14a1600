//! Hill discriminant of Lamé's equation
//!
//! ```text
//! y'' + (h - ν(ν+1) k² sn²(t, k)) y = 0
//! ```
//!
//! The crate computes the discriminant `D(h, ν, k)` by integrating the
//! equation over a half period `[0, K(k)]`, evaluates the closed-form
//! approximant `2 Re(B e^{2iωK})` built from complex gamma functions, bounds
//! the difference between the two rigorously, and turns the result into a
//! stability verdict.
//!
//! Module map:
//!
//! - [`special`]: complete elliptic integrals, Jacobi elliptic functions,
//!   complex gamma and the Gauss hypergeometric series.
//! - [`ode`]: adaptive Dormand–Prince integration of `u'' + q(t) u = 0`.
//! - [`bounds`]: explicit a priori constants and solution envelopes.
//! - [`legendre`]: the `k = 1` limit equation, solved by hypergeometric
//!   functions, and its oscillatory asymptotics.
//! - [`lame`]: parameters, discriminant, approximant, error bound and
//!   classification.
//! - [`sweep`], [`verify`], [`cli`]: CSV/JSON reports, the invariant suite and
//!   the command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
mod error;
pub mod lame;
pub mod legendre;
pub mod ode;
pub mod special;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use lame::{
    approx_discriminant, asymptotic_constants, classify, discriminant, error_bound, map_pendulum,
    q_lame, AsymptoticConstants, DiscriminantReport, LameParams, Verdict,
};
pub use ode::{fundamental_matrix, FundamentalMatrix, IntegrationConfig};
pub use special::{Complex, Modulus};
