//! Single-point reports and `τ` sweeps, with their CSV and JSON forms.
//!
//! CSV columns are `tau,k,kprime,K,E,omega,D,approx,bound,verdict`. Numbers
//! are written in scientific notation with 15 significant digits; missing
//! values are empty fields.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lame::{approx_discriminant, classify, error_bound, LameParams, Verdict};
use crate::ode::IntegrationConfig;
use crate::special::Modulus;
use crate::{Error, Result};

pub const CSV_HEADER: [&str; 10] =
    ["tau", "k", "kprime", "K", "E", "omega", "D", "approx", "bound", "verdict"];

/// One modulus specifier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModulusSpec {
    K(f64),
    KPrime(f64),
    Tau(f64),
}

impl ModulusSpec {
    pub fn to_modulus(self) -> Result<Modulus> {
        match self {
            ModulusSpec::K(k) => Modulus::from_k(k),
            ModulusSpec::KPrime(kp) => Modulus::from_kprime(kp),
            ModulusSpec::Tau(tau) => Modulus::from_tau(tau),
        }
    }

    fn tau(self, m: &Modulus) -> f64 {
        match self {
            ModulusSpec::Tau(tau) => tau,
            _ => m.tau(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub tau: f64,
    pub k: f64,
    pub kprime: f64,
    pub ellip_k: f64,
    pub ellip_e: f64,
    pub omega: Option<f64>,
    pub discriminant: Option<f64>,
    pub approx: Option<f64>,
    pub bound: Option<f64>,
    pub verdict: Verdict,
}

/// 15 significant digits, scientific notation.
pub fn format_number(x: f64) -> String {
    format!("{x:.14e}")
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}

impl SweepRow {
    /// Evaluate one point. Integration failures leave `discriminant` empty
    /// with verdict `Undetermined`; invalid parameters are errors.
    pub fn compute(h: f64, nu: f64, spec: ModulusSpec, cfg: &IntegrationConfig) -> Result<Self> {
        let modulus = spec.to_modulus()?;
        let p = LameParams::new(h, nu, modulus)?;
        let omega = crate::lame::asymptotic_constants(p.h(), p.nu()).ok().map(|c| c.omega);
        let (discriminant, approx, bound, verdict) = match classify(&p, cfg) {
            Ok(r) => (Some(r.discriminant), r.approx, r.bound, r.verdict),
            Err(Error::StepLimitExceeded { .. } | Error::ToleranceUnachievable { .. }) => (
                None,
                approx_discriminant(&p).ok(),
                error_bound(&p).ok(),
                Verdict::Undetermined,
            ),
            Err(e) => return Err(e),
        };
        Ok(Self {
            tau: spec.tau(&modulus),
            k: modulus.k(),
            kprime: modulus.kprime(),
            ellip_k: p.ellip_k(),
            ellip_e: p.ellip_e(),
            omega,
            discriminant,
            approx,
            bound,
            verdict,
        })
    }

    pub fn to_record(&self) -> [String; 10] {
        [
            format_number(self.tau),
            format_number(self.k),
            format_number(self.kprime),
            format_number(self.ellip_k),
            format_number(self.ellip_e),
            format_opt(self.omega),
            format_opt(self.discriminant),
            format_opt(self.approx),
            format_opt(self.bound),
            self.verdict.to_string(),
        ]
    }

    pub fn from_record(record: &csv::StringRecord) -> Result<Self> {
        if record.len() != CSV_HEADER.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} columns, found {}",
                CSV_HEADER.len(),
                record.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            record[i]
                .parse::<f64>()
                .map_err(|e| Error::InvalidArgument(format!("column {}: {e}", CSV_HEADER[i])))
        };
        let opt = |i: usize| -> Result<Option<f64>> {
            if record[i].is_empty() {
                Ok(None)
            } else {
                num(i).map(Some)
            }
        };
        Ok(Self {
            tau: num(0)?,
            k: num(1)?,
            kprime: num(2)?,
            ellip_k: num(3)?,
            ellip_e: num(4)?,
            omega: opt(5)?,
            discriminant: opt(6)?,
            approx: opt(7)?,
            bound: opt(8)?,
            verdict: record[9].parse()?,
        })
    }
}

/// Sweep parameters; `steps` points from `tau_min` to `tau_max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub h: f64,
    pub nu: f64,
    pub tau_min: f64,
    pub tau_max: f64,
    pub steps: usize,
}

impl SweepSpec {
    pub fn taus(&self) -> Result<Vec<f64>> {
        if !(self.tau_min < self.tau_max) {
            return Err(Error::InvalidArgument(format!(
                "tau_min = {} must be below tau_max = {}",
                self.tau_min, self.tau_max
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidArgument(format!("steps = {} must be at least 2", self.steps)));
        }
        let span = self.tau_max - self.tau_min;
        let n = (self.steps - 1) as f64;
        Ok((0..self.steps).map(|i| self.tau_min + span * i as f64 / n).collect())
    }
}

/// Rows in `τ` order; points are evaluated in parallel.
pub fn sweep(spec: &SweepSpec, cfg: &IntegrationConfig) -> Result<Vec<SweepRow>> {
    spec.taus()?
        .into_par_iter()
        .map(|tau| SweepRow::compute(spec.h, spec.nu, ModulusSpec::Tau(tau), cfg))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.to_record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::InvalidArgument(format!("unexpected CSV header {header:?}")));
    }
    r.records().map(|rec| SweepRow::from_record(&rec?)).collect()
}

/// Everything in a [`SweepRow`] plus the parameters and the polar form of `B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub h: f64,
    pub nu: f64,
    #[serde(flatten)]
    pub row: SweepRow,
    pub amplitude: f64,
    pub phase: f64,
    pub b_re: f64,
    pub b_im: f64,
    pub determinant: Option<f64>,
}

/// Report for one parameter point. Unlike [`SweepRow::compute`] this
/// requires the approximant and its error bound to be defined.
pub fn point_report(h: f64, nu: f64, spec: ModulusSpec, cfg: &IntegrationConfig) -> Result<PointReport> {
    let p = LameParams::new(h, nu, spec.to_modulus()?)?;
    approx_discriminant(&p)?;
    error_bound(&p)?;
    let constants = crate::lame::asymptotic_constants(p.h(), p.nu())?;
    let row = SweepRow::compute(h, nu, spec, cfg)?;
    let determinant = match row.discriminant {
        Some(_) => Some(crate::lame::half_period_matrix(&p, cfg)?.determinant()),
        None => None,
    };
    Ok(PointReport {
        h: p.h(),
        nu: p.nu(),
        row,
        amplitude: constants.amplitude,
        phase: constants.phase,
        b_re: constants.b.re,
        b_im: constants.b.im,
        determinant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_grid_hits_endpoints_exactly() {
        let spec = SweepSpec { h: 6.0, nu: 0.5, tau_min: 0.5, tau_max: 8.0, steps: 151 };
        let taus = spec.taus().unwrap();
        assert_eq!(taus.len(), 151);
        assert_eq!(taus[0], 0.5);
        assert_eq!(taus[90], 5.0);
        assert_eq!(taus[150], 8.0);
    }

    #[test]
    fn invalid_sweeps() {
        let base = SweepSpec { h: 6.0, nu: 0.5, tau_min: 1.0, tau_max: 2.0, steps: 5 };
        assert!(SweepSpec { tau_min: 2.0, ..base }.taus().is_err());
        assert!(SweepSpec { steps: 1, ..base }.taus().is_err());
    }

    #[test]
    fn number_format() {
        assert_eq!(format_number(5.0), "5.00000000000000e0");
        assert_eq!(format_number(-1.2745283951958117), "-1.27452839519581e0");
        assert_eq!(format_number(0.0046), "4.60000000000000e-3");
    }

    #[test]
    fn integration_failure_row() {
        let cfg = IntegrationConfig { max_steps: 2, ..Default::default() };
        let row = SweepRow::compute(6.0, 0.5, ModulusSpec::Tau(5.0), &cfg).unwrap();
        assert_eq!(row.discriminant, None);
        assert_eq!(row.verdict, Verdict::Undetermined);
        assert!(row.approx.is_some());
        let rec = row.to_record();
        assert_eq!(rec[6], "");
    }

    #[test]
    fn omega_undefined_row() {
        let row = SweepRow::compute(1.0, 2.0, ModulusSpec::Tau(3.0), &IntegrationConfig::default()).unwrap();
        assert_eq!(row.omega, None);
        assert_eq!(row.approx, None);
        assert!(row.discriminant.is_some());
    }

    #[test]
    fn point_requires_approximant() {
        let err = point_report(1.0, 2.0, ModulusSpec::Tau(5.0), &IntegrationConfig::default()).unwrap_err();
        assert!(matches!(err, Error::OmegaUndefined { .. }));
    }

    #[test]
    fn bad_header_rejected() {
        let data = "tau,k\n1,2\n";
        assert!(read_csv(data.as_bytes()).is_err());
    }
}
