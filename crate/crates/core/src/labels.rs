//! Displacement-label dynamics.
//!
//! The driven, damped pair admits an exact solution in which the classical
//! part of the motion is carried by a two-mode displacement D(beta, alpha):
//! alpha labels the second (damped, driven) oscillator, beta the first. The
//! labels obey the linear system
//!
//! ```text
//! d/dt' [alpha]   [-(Gamma+i Omega)   -i      ] [alpha]   [eps_hat e^{-i Omega t'}]
//!       [beta ] = [     -i        -i Omega    ] [beta ] + [          0            ]
//! ```
//!
//! (rescaled time t' = g t, eps_hat = epsilon/g). All evaluation happens in
//! the frame rotating at Omega, where the fast phase factors out; the
//! e^{-i Omega t'} phase is reapplied on output, so Omega can be arbitrarily
//! large without precision loss.

use num_complex::Complex64 as C64;

use crate::ctrig::env_cos_sinc;
use crate::density::{sector_profile, LossSide};
use crate::error::{Error, Result};
use crate::params::SystemParams;

/// The complex pair (alpha, beta) labelling the two-mode displacement at a
/// rescaled time t'.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisplacementLabels {
    /// Displacement of the second (damped, driven) oscillator.
    pub alpha: C64,
    /// Displacement of the first oscillator.
    pub beta: C64,
    /// Rescaled time t' = g t.
    pub t_prime: f64,
}

/// Effective classical drive seen by the first oscillator, divided by hbar
/// (same rate units as the input parameters).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveDrive {
    /// F(t)/hbar; satisfies F/hbar = g (beta - i alpha).
    pub value: C64,
}

#[inline]
fn rot_phase(omega_ratio: f64, t_prime: f64) -> C64 {
    C64::from_polar(1.0, -omega_ratio * t_prime)
}

fn require_damping(params: &SystemParams) -> Result<()> {
    if params.gamma > 0.0 {
        Ok(())
    } else {
        Err(Error::NoSteadyState {
            gamma: params.gamma,
        })
    }
}

/// Rotating-frame labels (A, B) with alpha = A e^{-i Omega t'},
/// beta = B e^{-i Omega t'}, for the standard initial condition
/// A(0) = epsilon/gamma, B(0) = 0.
pub fn labels_rotating(params: &SystemParams, t_prime: f64) -> Result<(C64, C64)> {
    require_damping(params)?;
    let gr = params.gamma / params.g;
    let er = params.epsilon_ratio();
    let (ec, es) = env_cos_sinc(gr, t_prime);
    let a = er * (ec / gr + 0.5 * es);
    let b_osc = er * (ec + (gr * gr - 2.0) * es / (2.0 * gr));
    let b = C64::new(0.0, -er) + C64::new(0.0, b_osc);
    Ok((C64::new(a, 0.0), b))
}

/// Label of the second oscillator at t' (standard initial condition).
pub fn alpha_of_t(params: &SystemParams, t_prime: f64) -> Result<C64> {
    let (a, _) = labels_rotating(params, t_prime)?;
    Ok(a * rot_phase(params.omega / params.g, t_prime))
}

/// Label of the first oscillator at t' (standard initial condition).
pub fn beta_of_t(params: &SystemParams, t_prime: f64) -> Result<C64> {
    let (_, b) = labels_rotating(params, t_prime)?;
    Ok(b * rot_phase(params.omega / params.g, t_prime))
}

/// Both labels at t'.
pub fn labels_of_t(params: &SystemParams, t_prime: f64) -> Result<DisplacementLabels> {
    let (a, b) = labels_rotating(params, t_prime)?;
    let ph = rot_phase(params.omega / params.g, t_prime);
    Ok(DisplacementLabels {
        alpha: a * ph,
        beta: b * ph,
        t_prime,
    })
}

/// Stationary label of the driven damped oscillator before the coupling is
/// switched on: (epsilon/gamma) e^{-i Omega t'}.
pub fn steady_alpha(params: &SystemParams, t_prime: f64) -> Result<C64> {
    require_damping(params)?;
    Ok(C64::new(params.epsilon / params.gamma, 0.0)
        * rot_phase(params.omega / params.g, t_prime))
}

/// Right-hand side of the label equations at (alpha, beta, t'), lab frame.
pub fn label_ode_rhs(alpha: C64, beta: C64, params: &SystemParams, t_prime: f64) -> (C64, C64) {
    let gr = params.gamma / params.g;
    let or = params.omega / params.g;
    let er = params.epsilon_ratio();
    let i = C64::new(0.0, 1.0);
    let d_alpha = -(C64::new(gr, or)) * alpha - i * beta + er * rot_phase(or, t_prime);
    let d_beta = -i * alpha - i * or * beta;
    (d_alpha, d_beta)
}

/// Propagate arbitrary initial labels (alpha0, beta0) at t' = 0 to t'.
///
/// Works for gamma = 0 too: the homogeneous propagator is
/// e^{-Gamma t/2} (c I + S N) in the rotating frame, and the particular
/// (steady) part is (0, -i eps_hat), which exists for every Gamma because
/// only the combination enters.
pub fn propagate_labels(
    params: &SystemParams,
    alpha0: C64,
    beta0: C64,
    t_prime: f64,
) -> DisplacementLabels {
    let gr = params.gamma / params.g;
    let or = params.omega / params.g;
    let er = params.epsilon_ratio();
    // propagator e^{-Gamma t/2}(c I + S N), N = [[-Gamma/2, -i], [-i, Gamma/2]];
    // its diagonal combinations are exactly the two sector profiles
    let p_first = sector_profile(gr, t_prime, LossSide::First).0;
    let (p_second, es) = sector_profile(gr, t_prime, LossSide::Second);
    let steady_b = C64::new(0.0, -er);
    let da0 = alpha0; // steady alpha component is zero in the rotating frame
    let db0 = beta0 - steady_b;
    let i = C64::new(0.0, 1.0);
    let a = da0 * p_first - i * es * db0;
    let b = steady_b + db0 * p_second - i * es * da0;
    let ph = rot_phase(or, t_prime);
    DisplacementLabels {
        alpha: a * ph,
        beta: b * ph,
        t_prime,
    }
}

/// Effective drive on the first oscillator, F(t)/hbar.
pub fn effective_drive(params: &SystemParams, t_prime: f64) -> Result<EffectiveDrive> {
    require_damping(params)?;
    let gr = params.gamma / params.g;
    let er = params.epsilon_ratio();
    let (ec, es) = env_cos_sinc(gr, t_prime);
    let transient = (1.0 / gr - 1.0) * ec + (2.0 + gr - gr * gr) * es / (2.0 * gr);
    let f_rot = C64::new(0.0, -er) * (1.0 + transient);
    Ok(EffectiveDrive {
        value: params.g * f_rot * rot_phase(params.omega / params.g, t_prime),
    })
}
