//! Crate-wide error type.

/// Errors produced by parameter validation, root finding and the
/// master-equation integrator.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
    /// The pre-interaction steady state alpha(0) = epsilon/gamma needs gamma > 0.
    #[error("no steady state: gamma must be positive (got {gamma})")]
    NoSteadyState { gamma: f64 },
    #[error("operation defined for the {expected} regime only (Gamma = {gamma_ratio})")]
    WrongRegime {
        expected: &'static str,
        gamma_ratio: f64,
    },
    #[error("root finding failed: {0}")]
    Bracket(String),
    #[error(
        "Fock truncation too small: mode {mode} top-level population {population:.3e} \
         exceeds {limit:.1e}; increase n_max{mode}"
    )]
    TruncationLeakage {
        mode: u8,
        population: f64,
        limit: f64,
    },
    #[error("not a physical density matrix: {0}")]
    NonPhysicalState(String),
    #[error("integrator step size underflow at t' = {t_prime:.6}")]
    StepSizeUnderflow { t_prime: f64 },
    #[error("trace drift {drift:.3e} exceeds {limit:.1e} at t' = {t_prime:.6}")]
    TraceDrift {
        t_prime: f64,
        drift: f64,
        limit: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
