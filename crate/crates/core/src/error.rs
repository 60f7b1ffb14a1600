use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("{what} did not converge within {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },

    #[error("gamma function has a pole at z = {0}")]
    PoleAtNonpositiveInteger(f64),

    #[error("hypergeometric series at x = {x} did not reach tolerance within {terms} terms")]
    SeriesDivergence { x: f64, terms: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integration stopped after {steps} steps at t = {t}")]
    StepLimitExceeded { t: f64, steps: usize },

    #[error("step size {step:e} at t = {t} is too small for the requested tolerance")]
    ToleranceUnachievable { t: f64, step: f64 },

    #[error("omega undefined: requires h > nu(nu+1) = {threshold}, got h = {h}")]
    OmegaUndefined { h: f64, threshold: f64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid energy {0}: must be positive")]
    InvalidEnergy(f64),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
