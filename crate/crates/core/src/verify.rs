//! Invariant suite run by `lame-hill verify`.
//!
//! Every property is sampled on a deterministic grid plus random points drawn
//! from a seeded ChaCha generator. A property passes when every sample meets
//! its threshold; the reported margin is the smallest `threshold - observed`
//! seen, so negative margins identify the failing samples.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_constants, lemma2_envelope, theorem1_bound, EndpointQuantity, Monotonicity};
use crate::lame::{
    approx_discriminant, asymptotic_constants, classify, error_bound, evaluate_discriminant, q_lame,
    LameParams,
};
use crate::legendre::{theorem2_bound, z_osc, z_osc_prime, Branch, LimitEquation, LimitQuantity};
use crate::ode::{integrate_observed, IntegrationConfig};
use crate::special::{complex_gamma, ellip_e, ellip_k, sin_pi, Complex, JacobiElliptic, Modulus};
use crate::sweep::{format_number, read_csv, sweep, write_csv, SweepSpec};
use crate::Result;

/// Allowance for integration error in inclusions whose analytic bound can be zero.
pub const NUMERICAL_ALLOWANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// 1 is a quick pass; larger values refine every grid.
    pub grid_density: usize,
    pub integration: IntegrationConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 1, grid_density: 2, integration: IntegrationConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub passed: bool,
    pub worst_margin: f64,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub grid_density: usize,
    pub rel_tol: f64,
    pub passed: bool,
    pub properties: Vec<PropertyOutcome>,
}

#[derive(Debug, Default)]
struct Tally {
    samples: usize,
    worst: f64,
}

impl Tally {
    fn new() -> Self {
        Self { samples: 0, worst: f64::INFINITY }
    }

    /// Records `observed <= threshold`.
    fn le(&mut self, observed: f64, threshold: f64) {
        self.samples += 1;
        let margin = threshold - observed;
        // NaN must fail
        self.worst = if margin.is_nan() { f64::NEG_INFINITY } else { self.worst.min(margin) };
    }

    fn holds(&mut self, ok: bool) {
        self.le(if ok { 0.0 } else { 1.0 }, 0.0);
    }
}

type Check = fn(&VerifyOptions, &mut ChaCha8Rng) -> Result<Tally>;

const PROPERTIES: &[(&str, Check)] = &[
    ("elliptic.e_minus_tanh_k", elliptic_gap),
    ("elliptic.k_upper_bound", elliptic_k_upper),
    ("elliptic.k_log_asymptotic", elliptic_k_log),
    ("jacobi.pythagorean", jacobi_pythagorean),
    ("jacobi.antiperiodic", jacobi_antiperiodic),
    ("jacobi.tanh_sandwich", jacobi_tanh_sandwich),
    ("gamma.reflection", gamma_reflection),
    ("gamma.duplication", gamma_duplication),
    ("ode.wronskian", ode_wronskian),
    ("ode.form_agreement", ode_form_agreement),
    ("ode.self_convergence", ode_self_convergence),
    ("bounds.monotone_envelope", bounds_monotone),
    ("bounds.solution_constants", bounds_constants),
    ("bounds.endpoint_inclusion", bounds_endpoint),
    ("lame.approx_inclusion", lame_inclusion),
    ("lame.nu_zero_exact", lame_nu_zero),
    ("lame.degree_symmetry", lame_symmetry),
    ("lame.b_modulus_identity", lame_b_modulus),
    ("lame.polar_form", lame_polar),
    ("lame.bound_tightening", lame_bound_tightening),
    ("legendre.connection_identities", legendre_connection),
    ("legendre.z_identities", legendre_z_identities),
    ("legendre.initial_data", legendre_initial_data),
    ("legendre.ode_residual", legendre_residual),
    ("legendre.sinusoid_inclusion", legendre_sinusoid),
    ("legendre.decay", legendre_decay),
    ("cli.csv_roundtrip", csv_roundtrip),
];

pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|(n, _)| *n).collect()
}

pub fn run(opts: &VerifyOptions) -> VerifySummary {
    let properties: Vec<PropertyOutcome> = PROPERTIES
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            // independent stream per property so adding one does not reshuffle others
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(i as u64);
            match check(opts, &mut rng) {
                Ok(t) => PropertyOutcome {
                    name: name.to_string(),
                    passed: t.samples > 0 && t.worst >= 0.0,
                    worst_margin: t.worst,
                    samples: t.samples,
                    error: None,
                },
                Err(e) => PropertyOutcome {
                    name: name.to_string(),
                    passed: false,
                    worst_margin: f64::NEG_INFINITY,
                    samples: 0,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    VerifySummary {
        seed: opts.seed,
        grid_density: opts.grid_density,
        rel_tol: opts.integration.rel_tol,
        passed: properties.iter().all(|p| p.passed),
        properties,
    }
}

// grids

const NU_GRID: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 2.0];

fn h_offsets(opts: &VerifyOptions) -> Vec<f64> {
    let n = (2 * opts.grid_density.max(1)).min(10);
    (0..n).map(|i| 1.0 + 9.0 * i as f64 / (n.max(2) - 1) as f64).collect()
}

fn tau_grid(opts: &VerifyOptions) -> Vec<f64> {
    if opts.grid_density <= 1 {
        vec![1.0, 3.0, 5.0, 8.0]
    } else {
        (1..=8).map(f64::from).collect()
    }
}

fn lame_grid(opts: &VerifyOptions) -> Result<Vec<LameParams>> {
    let mut out = Vec::new();
    for nu in NU_GRID {
        for j in h_offsets(opts) {
            for &tau in &tau_grid(opts) {
                out.push(LameParams::new(nu * (nu + 1.0) + j, nu, Modulus::from_tau(tau)?)?);
            }
        }
    }
    Ok(out)
}

fn kprime_log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

fn samples(opts: &VerifyOptions, base: usize) -> usize {
    base * opts.grid_density.max(1)
}

// special functions

fn elliptic_gap(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 20) {
        let m = Modulus::from_kprime(kprime_log_uniform(rng, 1e-6, 1.0))?;
        let k = ellip_k(m)?;
        t.le(ellip_e(m)? - k.tanh(), m.kprime().powi(2) * k + 1e-15);
    }
    Ok(t)
}

fn elliptic_k_upper(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 20) {
        let m = Modulus::from_kprime(kprime_log_uniform(rng, 1e-6, 0.999))?;
        t.le(ellip_k(m)?, PI / 2.0 - m.kprime().ln());
    }
    Ok(t)
}

fn elliptic_k_log(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 20) {
        let kp = kprime_log_uniform(rng, 1e-6, 1e-2);
        let k = ellip_k(Modulus::from_kprime(kp)?)?;
        t.le((k - (4.0 / kp).ln()).abs(), 10.0 * kp * kp * kp.ln().abs());
    }
    Ok(t)
}

fn jacobi_points(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Vec<(JacobiElliptic, f64, f64)>> {
    let mut out = Vec::new();
    for _ in 0..samples(opts, 10) {
        let m = Modulus::from_kprime(kprime_log_uniform(rng, 1e-6, 1.0))?;
        let k = ellip_k(m)?;
        out.push((JacobiElliptic::new(m)?, k, rng.gen_range(-2.0 * k..2.0 * k)));
    }
    Ok(out)
}

fn jacobi_pythagorean(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for (jac, _, x) in jacobi_points(opts, rng)? {
        let m = jac.modulus();
        let (sn, cn, dn) = jac.eval(x);
        t.le((sn * sn + cn * cn - 1.0).abs(), 1e-11);
        t.le((dn * dn - m.k2() * cn * cn - m.kprime().powi(2)).abs(), 1e-11);
    }
    Ok(t)
}

fn jacobi_antiperiodic(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for (jac, k, x) in jacobi_points(opts, rng)? {
        t.le((jac.sn(x + 2.0 * k) + jac.sn(x)).abs(), 1e-10);
    }
    Ok(t)
}

fn jacobi_tanh_sandwich(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 5) {
        let m = Modulus::from_k(rng.gen_range(0.05..0.999))?;
        let jac = JacobiElliptic::new(m)?;
        let k = ellip_k(m)?;
        let n = 20 * opts.grid_density.max(1);
        for i in 0..=n {
            let x = k * i as f64 / n as f64;
            let (sn, th) = (jac.sn(x), x.tanh());
            t.le(m.k() * sn - th, 1e-14);
            t.le(th - sn, 1e-14);
        }
    }
    Ok(t)
}

fn random_gamma_arg(rng: &mut ChaCha8Rng) -> Complex {
    Complex::new(rng.gen_range(-3.0..4.0), rng.gen_range(-20.0..20.0))
}

fn gamma_reflection(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    let one = Complex::new(1.0, 0.0);
    for _ in 0..samples(opts, 25) {
        let z = random_gamma_arg(rng);
        let lhs = complex_gamma(z)? * complex_gamma(one - z)? * sin_pi(z) / PI;
        t.le((lhs - one).norm(), 1e-11);
    }
    Ok(t)
}

fn gamma_duplication(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 25) {
        let z = random_gamma_arg(rng);
        let lhs = Complex::new(2.0, 0.0).powc(z - 1.0) * complex_gamma(z * 0.5)? * complex_gamma((z + 1.0) * 0.5)?;
        let rhs = PI.sqrt() * complex_gamma(z)?;
        t.le((lhs / rhs - 1.0).norm(), 1e-11);
    }
    Ok(t)
}

// integration

fn ode_wronskian(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for p in lame_grid(opts)? {
        let e = evaluate_discriminant(&p, &opts.integration)?;
        t.le((e.matrix.determinant() - 1.0).abs(), 1e-9);
    }
    Ok(t)
}

fn ode_form_agreement(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for p in lame_grid(opts)? {
        let e = evaluate_discriminant(&p, &opts.integration)?;
        t.le((e.symmetric - e.value).abs(), 10.0 * opts.integration.rel_tol);
    }
    Ok(t)
}

fn ode_self_convergence(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    let coarse = opts.integration;
    let fine = IntegrationConfig { rel_tol: coarse.rel_tol / 2.0, abs_tol: coarse.abs_tol / 2.0, ..coarse };
    for _ in 0..samples(opts, 4) {
        let nu = NU_GRID[rng.gen_range(0..NU_GRID.len())];
        let h = nu * (nu + 1.0) + rng.gen_range(1.0..10.0);
        let p = LameParams::new(h, nu, Modulus::from_tau(rng.gen_range(1.0..8.0))?)?;
        let d1 = evaluate_discriminant(&p, &coarse)?.value;
        let d2 = evaluate_discriminant(&p, &fine)?.value;
        t.le((d1 - d2).abs(), 10.0 * coarse.rel_tol);
    }
    Ok(t)
}

/// Sup norms of `y1, y1', y2, y2'` along an integration from `a` to `b`.
fn sup_norms<Q: FnMut(f64) -> f64>(q: Q, a: f64, b: f64, cfg: &IntegrationConfig) -> Result<[f64; 4]> {
    let mut sup = [0.0_f64; 4];
    integrate_observed(q, a, b, cfg, |_, m| {
        for (s, v) in sup.iter_mut().zip([m.y1, m.y1p, m.y2, m.y2p]) {
            *s = s.max(v.abs());
        }
    })?;
    Ok(sup)
}

fn bounds_monotone(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    let cases: [(fn(f64) -> f64, Monotonicity); 2] =
        [(|x| 1.0 + x, Monotonicity::Nondecreasing), (|x| 2.0 - x, Monotonicity::Nonincreasing)];
    for (q, dir) in cases {
        let env = lemma2_envelope(1.0, 2.0, dir)?;
        let sup = sup_norms(q, 0.0, 1.0, &opts.integration)?;
        for (s, e) in sup.iter().zip([env.y1, env.y1p, env.y2, env.y2p]) {
            t.le(*s, e + 1e-9);
        }
    }
    Ok(t)
}

fn bounds_constants(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 3) {
        let nu = rng.gen_range(-0.5..2.5);
        let m = Modulus::from_tau(rng.gen_range(0.5..6.0))?;
        let floor = (nu * (nu + 1.0) * m.k2()).max(0.0);
        let h = floor + rng.gen_range(0.2..10.0);
        let p = LameParams::new(h, nu, m)?;
        let c = bound_constants(h, p.nu(), &m)?;
        let s = rng.gen_range(0.0..p.ellip_k() * 0.99);
        let sup = sup_norms(|x| q_lame(x, &p), s, p.ellip_k(), &opts.integration)?;
        for (v, bound) in sup.iter().zip([c.c1, c.c1p, c.c2, c.c2p]) {
            t.le(*v, bound + 1e-9);
        }
    }
    Ok(t)
}

fn inclusion_grid(opts: &VerifyOptions) -> Result<Vec<LameParams>> {
    let taus = if opts.grid_density <= 1 { vec![3.0, 8.0] } else { vec![3.0, 5.0, 8.0] };
    let mut out = Vec::new();
    for nu in NU_GRID {
        for j in h_offsets(opts) {
            for &tau in &taus {
                out.push(LameParams::new(nu * (nu + 1.0) + j, nu, Modulus::from_tau(tau)?)?);
            }
        }
    }
    Ok(out)
}

fn bounds_endpoint(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for p in inclusion_grid(opts)? {
        let m = evaluate_discriminant(&p, &opts.integration)?.matrix;
        let w = LimitEquation::new(p.h(), p.nu())?.state(p.ellip_k())?;
        let m_mod = p.modulus();
        t.le((m.y1 - w.w1).abs(), theorem1_bound(p.h(), p.nu(), &m_mod, EndpointQuantity::Y1)? + NUMERICAL_ALLOWANCE);
        t.le(
            (m.y2p - w.w2p).abs(),
            theorem1_bound(p.h(), p.nu(), &m_mod, EndpointQuantity::Y2Prime)? + NUMERICAL_ALLOWANCE,
        );
    }
    Ok(t)
}

// discriminant

fn lame_inclusion(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for p in lame_grid(opts)? {
        let d = evaluate_discriminant(&p, &opts.integration)?.value;
        t.le((d - approx_discriminant(&p)?).abs(), error_bound(&p)? + NUMERICAL_ALLOWANCE);
    }
    Ok(t)
}

fn lame_nu_zero(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for h in [1.0, 2.0, 4.0, 9.0] {
        for tau in [1.0, 3.0, 5.0] {
            let p = LameParams::new(h, 0.0, Modulus::from_tau(tau)?)?;
            let d = evaluate_discriminant(&p, &opts.integration)?.value;
            t.le((d - 2.0 * (2.0 * h.sqrt() * p.ellip_k()).cos()).abs(), 1e-8);
            t.le(error_bound(&p)?, 0.0);
        }
    }
    Ok(t)
}

fn lame_symmetry(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for _ in 0..samples(opts, 2) {
        // multiples of 1/64 so that -1-ν and its reflection are exact
        let nu = f64::from(rng.gen_range(-32..128)) / 64.0;
        let h = nu * (nu + 1.0) + rng.gen_range(0.5..5.0);
        let m = Modulus::from_tau(rng.gen_range(1.0..6.0))?;
        let a = classify(&LameParams::new(h, nu, m)?, &opts.integration)?;
        let b = classify(&LameParams::new(h, -1.0 - nu, m)?, &opts.integration)?;
        t.holds(a == b);
    }
    Ok(t)
}

fn b_modulus_defect(h: f64, nu: f64) -> Result<f64> {
    let c = asymptotic_constants(h, nu)?;
    let s = (nu * PI).sin() / (c.omega * PI).sinh();
    Ok((c.b.norm_sqr() - 1.0 - s * s).abs())
}

fn lame_b_modulus(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for nu in NU_GRID {
        for j in h_offsets(opts) {
            t.le(b_modulus_defect(nu * (nu + 1.0) + j, nu)?, 1e-10);
        }
    }
    Ok(t)
}

fn lame_polar(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for p in lame_grid(opts)? {
        let c = asymptotic_constants(p.h(), p.nu())?;
        let polar = c.amplitude * (2.0 * c.omega * p.ellip_k() + c.phase).cos();
        t.le((approx_discriminant(&p)? - polar).abs(), 1e-12);
    }
    Ok(t)
}

fn lame_bound_tightening(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    let mut prev = f64::INFINITY;
    for tau in 2..=8 {
        let p = LameParams::new(6.0, 0.5, Modulus::from_tau(f64::from(tau))?)?;
        let bound = error_bound(&p)?;
        let d = evaluate_discriminant(&p, &opts.integration)?.value;
        t.le((d - approx_discriminant(&p)?).abs(), bound + NUMERICAL_ALLOWANCE);
        t.holds(bound < prev);
        prev = bound;
    }
    Ok(t)
}

// limit equation

fn legendre_connection(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for nu in NU_GRID {
        for j in h_offsets(opts) {
            let h = nu * (nu + 1.0) + j;
            let eq = LimitEquation::new(h, nu)?;
            let c = eq.connection_constants()?;
            let om = c.omega;
            let expect = Complex::new(-(nu * PI).sin() / (om * PI).sinh(), 1.0);
            t.le((om * c.a1 * c.a2.conj() - expect).norm(), 1e-10);
            let b = asymptotic_constants(h, nu)?.b;
            t.le((Complex::new(0.0, om) * c.a1 * c.a2 - b).norm(), 1e-10);
        }
    }
    Ok(t)
}

fn legendre_z_identities(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for nu in NU_GRID {
        let h = nu * (nu + 1.0) + rng.gen_range(1.0..10.0);
        let c = LimitEquation::new(h, nu)?.connection_constants()?;
        let b = asymptotic_constants(h, nu)?.b;
        for _ in 0..samples(opts, 3) {
            let x = rng.gen_range(0.0..10.0);
            let (z1, z1p) = (z_osc(x, &c, Branch::One), z_osc_prime(x, &c, Branch::One));
            let (z2, z2p) = (z_osc(x, &c, Branch::Two), z_osc_prime(x, &c, Branch::Two));
            t.le((z1 * z2p - z1p * z2 - 1.0).abs(), 1e-10);
            let target = (b * Complex::from_polar(1.0, 2.0 * c.omega * x)).re;
            t.le((z1 * z2p + z1p * z2 - target).abs(), 1e-10);
        }
    }
    Ok(t)
}

/// Richardson-extrapolated central difference.
fn derivative<F: Fn(f64) -> Result<f64>>(f: F, x: f64, step: f64) -> Result<f64> {
    let d = |s: f64| -> Result<f64> { Ok((f(x + s)? - f(x - s)?) / (2.0 * s)) };
    Ok((4.0 * d(step / 2.0)? - d(step)?) / 3.0)
}

fn legendre_initial_data(_: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for (h, nu) in [(6.0, 0.5), (3.0, 1.0), (1.0, -0.25), (10.0, 2.0)] {
        let eq = LimitEquation::new(h, nu)?;
        let s = eq.state(0.0)?;
        t.le((s.w1 - 1.0).abs(), 1e-12);
        t.le(s.w2.abs(), 1e-12);
        t.le(derivative(|x| Ok(eq.state(x)?.w1), 0.0, 1e-3)?.abs(), 1e-8);
        t.le((derivative(|x| Ok(eq.state(x)?.w2), 0.0, 1e-3)? - 1.0).abs(), 1e-8);
    }
    Ok(t)
}

fn legendre_residual(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    let (h, nu) = (6.0, 0.5);
    let eq = LimitEquation::new(h, nu)?;
    let n = 10 * opts.grid_density.max(1);
    for i in 0..=n {
        let x = 5.0 * i as f64 / n as f64;
        let s = eq.state(x)?;
        let q = h - nu * (nu + 1.0) * x.tanh().powi(2);
        let w1pp = derivative(|y| Ok(eq.state(y)?.w1p), x, 1e-3)?;
        let w2pp = derivative(|y| Ok(eq.state(y)?.w2p), x, 1e-3)?;
        t.le((w1pp + q * s.w1).abs(), 1e-8);
        t.le((w2pp + q * s.w2).abs(), 1e-8);
        // the analytic derivatives agree with differentiated values
        t.le((derivative(|y| Ok(eq.state(y)?.w1), x, 1e-3)? - s.w1p).abs(), 1e-8);
        t.le((derivative(|y| Ok(eq.state(y)?.w2), x, 1e-3)? - s.w2p).abs(), 1e-8);
    }
    Ok(t)
}

fn legendre_sinusoid(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for nu in NU_GRID {
        for j in h_offsets(opts) {
            let h = nu * (nu + 1.0) + j;
            let eq = LimitEquation::new(h, nu)?;
            let c = eq.connection_constants()?;
            for _ in 0..2 {
                let x = rng.gen_range(0.0..5.0);
                let s = eq.state(x)?;
                t.le(
                    (s.w1 - z_osc(x, &c, Branch::One)).abs(),
                    theorem2_bound(x, h, nu, LimitQuantity::W1)? + 1e-9,
                );
                t.le(
                    (s.w2p - z_osc_prime(x, &c, Branch::Two)).abs(),
                    theorem2_bound(x, h, nu, LimitQuantity::W2Prime)? + 1e-9,
                );
            }
        }
    }
    Ok(t)
}

fn legendre_decay(_: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    for (h, nu) in [(6.0, 0.5), (10.0, 1.0), (8.0, 2.0)] {
        let eq = LimitEquation::new(h, nu)?;
        let c = eq.connection_constants()?;
        let gap = |x: f64| -> Result<f64> { Ok((eq.state(x)?.w1 - z_osc(x, &c, Branch::One)).abs()) };
        t.le(gap(6.0)?, gap(2.0)?);
    }
    Ok(t)
}

fn csv_roundtrip(opts: &VerifyOptions, _: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::new();
    let spec = SweepSpec { h: 6.0, nu: 0.5, tau_min: 1.0, tau_max: 6.0, steps: 2 + 2 * opts.grid_density };
    let rows = sweep(&spec, &opts.integration)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    let back = read_csv(buf.as_slice())?;
    t.holds(back.len() == rows.len());
    for (a, b) in rows.iter().zip(&back) {
        t.holds(a.to_record() == b.to_record());
        t.holds(format_number(a.tau) == format_number(b.tau));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique() {
        let mut names = property_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), PROPERTIES.len());
    }

    #[test]
    fn tally_rejects_nan() {
        let mut t = Tally::new();
        t.le(f64::NAN, 1.0);
        assert!(t.worst < 0.0);
    }
}
