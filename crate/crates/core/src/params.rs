//! Model parameters, dimensionless ratios and damping-regime classification.
//!
//! The model: two resonant harmonic oscillators (frequency omega) coupled at
//! rate g; the second is damped at rate gamma (zero-temperature loss) and
//! resonantly driven with amplitude epsilon. The first starts in
//! cos(theta)|0> + sin(theta)|1>. Everything downstream depends only on
//! Gamma = gamma/g, Omega = omega/g and rescaled time t' = g t.

use num_complex::Complex64 as C64;

use crate::ctrig::disc;
use crate::error::{Error, Result};

/// Half-width of the Gamma band treated as critically damped.
pub const CRITICAL_BAND: f64 = 1e-9;

/// Physical parameters of the coupled pair.
///
/// Immutable after construction; all fields are rates in the same unit
/// system (the absolute unit cancels from every observable).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Common angular frequency of both oscillators and the drive (> 0).
    pub omega: f64,
    /// Loss rate of the second oscillator (>= 0).
    pub gamma: f64,
    /// Coupling constant (> 0).
    pub g: f64,
    /// Drive amplitude on the second oscillator (>= 0).
    pub epsilon: f64,
    /// Initial superposition angle of the first oscillator, in [0, pi/2].
    pub theta: f64,
}

/// The two free parameters left after measuring time in units of 1/g.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    /// Gamma = gamma / g.
    pub gamma_ratio: f64,
    /// Omega = omega / g.
    pub omega_ratio: f64,
}

impl SystemParams {
    pub fn new(omega: f64, gamma: f64, g: f64, epsilon: f64, theta: f64) -> Result<Self> {
        fn check(name: &'static str, value: f64, ok: bool, constraint: &'static str) -> Result<()> {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    constraint: "must be finite",
                });
            }
            if !ok {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    constraint,
                });
            }
            Ok(())
        }
        check("omega", omega, omega > 0.0, "must be > 0")?;
        check("gamma", gamma, gamma >= 0.0, "must be >= 0")?;
        check("g", g, g > 0.0, "must be > 0")?;
        check("epsilon", epsilon, epsilon >= 0.0, "must be >= 0")?;
        check(
            "theta",
            theta,
            (0.0..=std::f64::consts::FRAC_PI_2).contains(&theta),
            "must lie in [0, pi/2]",
        )?;
        Ok(Self {
            omega,
            gamma,
            g,
            epsilon,
            theta,
        })
    }

    pub fn dimensionless(&self) -> DimensionlessParams {
        DimensionlessParams {
            gamma_ratio: self.gamma / self.g,
            omega_ratio: self.omega / self.g,
        }
    }

    /// epsilon / g, the drive amplitude in rescaled units.
    pub fn epsilon_ratio(&self) -> f64 {
        self.epsilon / self.g
    }

    pub fn regime(&self) -> Regime {
        classify_regime(self.gamma / self.g)
    }
}

/// Validate physical parameters and derive the dimensionless pair.
pub fn make_params(
    omega: f64,
    gamma: f64,
    g: f64,
    epsilon: f64,
    theta: f64,
) -> Result<(SystemParams, DimensionlessParams)> {
    let p = SystemParams::new(omega, gamma, g, epsilon, theta)?;
    let d = p.dimensionless();
    Ok((p, d))
}

/// Damping regime, split by the sign of g_tilde^2 = g^2 (1 - Gamma^2/4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Underdamped,
    CriticallyDamped,
    Overdamped,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Underdamped => write!(f, "underdamped"),
            Regime::CriticallyDamped => write!(f, "critically damped"),
            Regime::Overdamped => write!(f, "overdamped"),
        }
    }
}

/// Classify by Gamma with the [`CRITICAL_BAND`] tolerance around Gamma = 2.
pub fn classify_regime(gamma_ratio: f64) -> Regime {
    if (gamma_ratio - 2.0).abs() <= CRITICAL_BAND {
        Regime::CriticallyDamped
    } else if gamma_ratio < 2.0 {
        Regime::Underdamped
    } else {
        Regime::Overdamped
    }
}

/// The effective frequency g_tilde / g = sqrt(1 - Gamma^2/4) as a complex
/// number: real and positive below critical damping, zero at it, and
/// i sqrt(Gamma^2/4 - 1) above (positive imaginary part).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GTilde {
    pub value: C64,
}

pub fn g_tilde(gamma_ratio: f64) -> GTilde {
    let d = disc(gamma_ratio);
    let value = if d >= 0.0 {
        C64::new(d.sqrt(), 0.0)
    } else {
        C64::new(0.0, (-d).sqrt())
    };
    GTilde { value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn make_params_basic_ratios() {
        let (_, d) = make_params(1.0, 1.0, 1.0, 1.0, FRAC_PI_2).unwrap();
        assert_eq!(d.gamma_ratio, 1.0);
        assert_eq!(d.omega_ratio, 1.0);
    }

    #[test]
    fn ramsey_zone_numbers_land_highly_overdamped() {
        // omega = 1e10, Q = 1e4 so gamma = omega/Q, g = 1e4, epsilon = gamma
        let omega = 1e10;
        let gamma = omega / 1e4;
        let (p, d) = make_params(omega, gamma, 1e4, gamma, FRAC_PI_2).unwrap();
        assert_eq!(d.gamma_ratio, 100.0);
        assert_eq!(p.regime(), Regime::Overdamped);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(make_params(1.0, 1.0, 0.0, 1.0, 0.3).is_err());
        assert!(make_params(1.0, 1.0, -1.0, 1.0, 0.3).is_err());
        assert!(make_params(1.0, -0.1, 1.0, 1.0, 0.3).is_err());
        assert!(make_params(0.0, 1.0, 1.0, 1.0, 0.3).is_err());
        assert!(make_params(1.0, 1.0, 1.0, -1.0, 0.3).is_err());
        assert!(make_params(1.0, 1.0, 1.0, 1.0, 2.0).is_err());
        assert!(make_params(f64::NAN, 1.0, 1.0, 1.0, 0.3).is_err());
        assert!(make_params(1.0, 1.0, f64::INFINITY, 1.0, 0.3).is_err());
    }

    #[test]
    fn regime_dispatch() {
        assert_eq!(classify_regime(1.0), Regime::Underdamped);
        assert_eq!(classify_regime(2.0), Regime::CriticallyDamped);
        assert_eq!(classify_regime(2.0 + 0.5 * CRITICAL_BAND), Regime::CriticallyDamped);
        assert_eq!(classify_regime(3.0), Regime::Overdamped);
    }

    #[test]
    fn g_tilde_reference_points() {
        assert_eq!(g_tilde(0.0).value, C64::new(1.0, 0.0));
        assert_eq!(g_tilde(2.0).value, C64::new(0.0, 0.0));
        let gt = g_tilde(3.0).value;
        assert!(gt.re == 0.0 && (gt.im - (1.25f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn regime_and_g_tilde_agree() {
        for &g in &[0.0, 0.3, 1.5, 1.999, 2.0, 2.001, 4.0, 50.0] {
            let gt = g_tilde(g).value;
            match classify_regime(g) {
                Regime::Underdamped => assert!(gt.re > 0.0 && gt.im == 0.0),
                Regime::CriticallyDamped => assert!(gt.norm() < 1e-4),
                Regime::Overdamped => assert!(gt.re == 0.0 && gt.im > 0.0),
            }
        }
    }

    proptest! {
        #[test]
        fn g_tilde_identity(gamma_ratio in 0.0f64..50.0) {
            let gt = g_tilde(gamma_ratio).value;
            let lhs = gt * gt + C64::new(gamma_ratio * gamma_ratio / 4.0, 0.0);
            prop_assert!((lhs - C64::new(1.0, 0.0)).norm() < 1e-14 * (1.0 + gamma_ratio * gamma_ratio));
        }
    }
}
