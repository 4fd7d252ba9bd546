//! Regime-continued oscillatory basis functions.
//!
//! Every closed form in this crate is built from
//!
//! ```text
//! c(t) = cos(sqrt(d) t)            S(t) = sin(sqrt(d) t) / sqrt(d)
//! ```
//!
//! with discriminant d = 1 - Gamma^2/4. Both are entire functions of d, so
//! the underdamped (d > 0), critically damped (d = 0) and overdamped (d < 0,
//! where they become cosh and sinh/kappa) branches are one smooth family.
//! Near d = 0 the direct trig/hyperbolic forms lose digits to 0/0
//! cancellation; there we evaluate the power series in z = d t^2 instead,
//! which is exact through the critical point.

/// Discriminant d = 1 - Gamma^2/4 of the coupled-decay characteristic equation.
#[inline]
pub fn disc(gamma_ratio: f64) -> f64 {
    1.0 - gamma_ratio * gamma_ratio / 4.0
}

/// Series/exact switch point: |d| t^2 below this uses the series.
/// Five series terms leave a truncation error below 1e-30 at the boundary.
const SERIES_Z: f64 = 1e-4;

/// Continued (cos(sqrt(d) t), sin(sqrt(d) t)/sqrt(d)).
pub fn cos_sinc(d: f64, t: f64) -> (f64, f64) {
    let z = d * t * t;
    if z.abs() < SERIES_Z {
        let c = 1.0 - z / 2.0 * (1.0 - z / 12.0 * (1.0 - z / 30.0 * (1.0 - z / 56.0)));
        let s = t * (1.0 - z / 6.0 * (1.0 - z / 20.0 * (1.0 - z / 42.0 * (1.0 - z / 72.0))));
        (c, s)
    } else if d > 0.0 {
        let w = d.sqrt();
        ((w * t).cos(), (w * t).sin() / w)
    } else {
        let w = (-d).sqrt();
        ((w * t).cosh(), (w * t).sinh() / w)
    }
}

/// `cos_sinc` at the crate's standard discriminant for a given Gamma.
#[inline]
pub fn cos_sinc_gamma(gamma_ratio: f64, t: f64) -> (f64, f64) {
    cos_sinc(disc(gamma_ratio), t)
}

/// True when `cos_sinc(d, t)` takes the hyperbolic branch (where the bare
/// values grow like e^{kappa t} and need envelope folding to stay finite).
#[inline]
pub fn hyperbolic_branch(d: f64, t: f64) -> bool {
    d < 0.0 && (d * t * t).abs() >= SERIES_Z
}

/// Envelope-folded pair e^{-Gamma t/2} (c(t), S(t)).
///
/// In the overdamped branch both exponents kappa - Gamma/2 and
/// -(kappa + Gamma/2) are negative, so this stays finite for arbitrarily
/// large Gamma t where the bare cosh/sinh overflow.
pub fn env_cos_sinc(gamma_ratio: f64, t: f64) -> (f64, f64) {
    let d = disc(gamma_ratio);
    if hyperbolic_branch(d, t) {
        let kappa = (-d).sqrt();
        let ep = ((kappa - 0.5 * gamma_ratio) * t).exp();
        let em = (-(kappa + 0.5 * gamma_ratio) * t).exp();
        (0.5 * (ep + em), (ep - em) / (2.0 * kappa))
    } else {
        let (c, s) = cos_sinc(d, t);
        let env = (-0.5 * gamma_ratio * t).exp();
        (env * c, env * s)
    }
}
