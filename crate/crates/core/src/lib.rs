//! Exact dynamics of two resonantly coupled harmonic oscillators, one of
//! them damped and classically driven, at zero temperature.
//!
//! The crate provides
//!
//! * the displacement-label dynamics carrying the classical motion
//!   ([`labels`]),
//! * the closed-form displaced-frame two-qubit state ([`density`]) and the
//!   entanglement/decoherence measures built on it ([`metrics`]),
//! * closed-form critical times with numerical refinements ([`critical`]),
//! * a truncated-Fock-space Lindblad master-equation integrator used as an
//!   independent cross-check ([`oracle`]),
//! * and a verification battery wiring all of it together ([`verify`]).
//!
//! Everything is parameterized by the two dimensionless ratios
//! Gamma = gamma/g and Omega = omega/g, with time measured as t' = g t.

pub mod critical;
pub mod ctrig;
pub mod density;
pub mod error;
pub mod fock;
pub mod labels;
pub mod linalg;
pub mod metrics;
pub mod oracle;
pub mod params;
pub mod rk;
pub mod roots;
pub mod verify;

pub use density::{lab_frame_density, rho_tilde, rho_tilde_loss_on_second, TwoQubitDensity};
pub use error::{Error, Result};
pub use labels::{
    alpha_of_t, beta_of_t, effective_drive, label_ode_rhs, labels_of_t, propagate_labels,
    steady_alpha, DisplacementLabels, EffectiveDrive,
};
pub use metrics::{
    concurrence_closed, concurrence_wootters, linear_entropy_osc1, metric_sample, x_function,
    MetricSample,
};
pub use params::{
    classify_regime, g_tilde, make_params, DimensionlessParams, GTilde, Regime, SystemParams,
    CRITICAL_BAND,
};
