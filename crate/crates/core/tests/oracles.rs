//! Reference values from independent high-precision evaluation (50-digit
//! arithmetic for special functions, an eighth-order integrator for D).

use lame_hill::legendre::{w1, w2, LimitEquation};
use lame_hill::special::{ellip_e, ellip_k};
use lame_hill::verify::{self, VerifyOptions};
use lame_hill::{
    approx_discriminant, asymptotic_constants, classify, discriminant, error_bound, fundamental_matrix,
    IntegrationConfig, LameParams, Modulus, Verdict,
};

fn params(h: f64, nu: f64, tau: f64) -> LameParams {
    LameParams::new(h, nu, Modulus::from_tau(tau).unwrap()).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1.0)
}

// tau, K, E, approx, bound (h = 6, nu = 1/2)
const TABLE: [(f64, f64, f64, f64, f64); 4] = [
    (2.0, 2.152317162231918685, 1.2125382141223813485, -1.4523672260661822209, 0.74420145848405479605),
    (3.0, 2.5919701598207685914, 1.102388069955752068, 1.8655186590316937908, 0.34904966537412557732),
    (5.0, 3.5500019816444043772, 1.0205076121992833442, -1.2745283951958105974, 0.066640951994879945683),
    (8.0, 5.0404823768207358702, 1.0015230133075541804, -0.28678467137291521415, 0.0047323646722496616329),
];

// tau, D from an independent eighth-order integration at h = 6, nu = 1/2
const DISCRIMINANTS: [(f64, f64); 5] = [
    (0.5, -0.2562579963551648),
    (2.0, -1.35581327927697),
    (3.0, 1.88824647229506),
    (5.0, -1.2642648157481573),
    (8.0, -0.28580479354304344),
];

#[test]
fn elliptic_integrals_along_tau() {
    for (tau, kk, e, _, _) in TABLE {
        let m = Modulus::from_tau(tau).unwrap();
        assert!(close(ellip_k(m).unwrap(), kk, 1e-14), "K at tau = {tau}");
        assert!(close(ellip_e(m).unwrap(), e, 1e-14), "E at tau = {tau}");
    }
    assert!((Modulus::from_tau(5.0).unwrap().k() - 0.99326205300091453290).abs() < 1e-15);
}

#[test]
fn approximant_and_bound_along_tau() {
    for (tau, _, _, approx, bound) in TABLE {
        let p = params(6.0, 0.5, tau);
        assert!(close(approx_discriminant(&p).unwrap(), approx, 1e-12), "approx at tau = {tau}");
        assert!(close(error_bound(&p).unwrap(), bound, 1e-12), "bound at tau = {tau}");
    }
    let p = params(6.0, 0.5, 0.5);
    assert!(close(approx_discriminant(&p).unwrap(), 0.060375862766710256289, 1e-12));
    assert!(close(error_bound(&p).unwrap(), 1.8304151450299066064, 1e-12));
}

#[test]
fn discriminant_against_reference_integrator() {
    let cfg = IntegrationConfig::default();
    for (tau, d) in DISCRIMINANTS {
        let got = discriminant(&params(6.0, 0.5, tau), &cfg).unwrap();
        assert!((got - d).abs() < 1e-9, "tau = {tau}: {got} vs {d}");
    }
}

#[test]
fn connection_constant_b() {
    let c = asymptotic_constants(6.0, 0.5).unwrap();
    assert!((c.b.re - 0.94934189953596410491).abs() < 1e-13);
    assert!((c.b.im - 0.31424861968487569170).abs() < 1e-13);
    assert!((c.amplitude - 2.0 * 1.00000111859357547704).abs() < 1e-13);
    assert!((c.phase - 0.31966470407138004746).abs() < 1e-13);
    let c = asymptotic_constants(10.0, 1.0).unwrap();
    assert!((c.b.im - 0.62853936105470891058).abs() < 1e-13);
}

#[test]
fn limit_solutions_against_series_oracle() {
    let cases = [
        (1.0, -0.76736687590848792709, 0.2752169341853474009),
        (2.0, 0.026710427837467298792, -0.41947233970415395989),
    ];
    for (t, a, b) in cases {
        assert!((w1(t, 6.0, 0.5).unwrap() - a).abs() < 1e-12, "w1({t})");
        assert!((w2(t, 6.0, 0.5).unwrap() - b).abs() < 1e-12, "w2({t})");
    }
}

#[test]
fn limit_solutions_against_direct_integration() {
    let cfg = IntegrationConfig::default();
    for (h, nu) in [(6.0, 0.5), (10.0, 1.0), (3.0, -0.3)] {
        let lam = nu * (nu + 1.0);
        let eq = LimitEquation::new(h, nu).unwrap();
        for t in [0.7, 2.0, 4.5] {
            let m = fundamental_matrix(|s| h - lam * s.tanh().powi(2), 0.0, t, &cfg).unwrap();
            let s = eq.state(t).unwrap();
            for (got, want) in [(s.w1, m.y1), (s.w1p, m.y1p), (s.w2, m.y2), (s.w2p, m.y2p)] {
                assert!((got - want).abs() < 1e-9, "(h, nu, t) = ({h}, {nu}, {t}): {got} vs {want}");
            }
        }
    }
}

#[test]
fn low_tau_verdict_is_certified_and_consistent() {
    let r = classify(&params(6.0, 0.5, 0.5), &IntegrationConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::ProvablyStable);
    let (approx, bound) = (r.approx.unwrap(), r.bound.unwrap());
    assert!(approx.abs() + bound < 2.0);
    assert!((DISCRIMINANTS[0].1 - approx).abs() <= bound);
}

#[test]
fn boundary_discriminant_is_undetermined() {
    let m = Modulus::from_tau(2.0).unwrap();
    let kk = ellip_k(m).unwrap();
    let h = (std::f64::consts::PI / (2.0 * kk)).powi(2);
    let p = LameParams::new(h, 0.0, m).unwrap();
    let r = classify(&p, &IntegrationConfig::default()).unwrap();
    assert!((r.discriminant + 2.0).abs() < 1e-8);
    assert_eq!(r.verdict, Verdict::Undetermined);
}

#[test]
fn verify_is_stable_across_seeds() {
    for seed in 1..=5 {
        let s = verify::run(&VerifyOptions { seed, ..VerifyOptions::default() });
        let failed: Vec<_> = s.properties.iter().filter(|p| !p.passed).map(|p| p.name.clone()).collect();
        assert!(s.passed, "seed {seed}: {failed:?}");
    }
}
