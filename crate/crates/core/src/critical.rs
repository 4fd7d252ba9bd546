//! Closed-form critical times (concurrence zeros and maxima, linear-entropy
//! extrema and half crossings) plus independent numerical refinements used
//! to validate them.
//!
//! Underdamped formulas, with nu = sqrt(1 - Gamma^2/4) and phi = arccos(Gamma/2):
//!
//! ```text
//! tau_1n = n pi / nu                         concurrence zeros (q = 0)
//! tau_2n = (phi + n pi) / nu                 concurrence zeros (p = 0)
//! tau_{+-n} = ((2n+1) pi +- arccos(Gamma^2/4) - 2 arcsin(Gamma/2)) / (2 nu)
//! C_{+-n} = sin^2(theta) K_{+-} e^{-Gamma tau},  K_{+-} = sqrt(1+Gamma^2/4) +- Gamma/2
//! tau_4n = (2 phi + n pi) / nu               extrema of x(t')
//! ```
//!
//! Overdamped, with kappa = sqrt(Gamma^2/4 - 1):
//!
//! ```text
//! tau_{+-} = (2 arccosh(Gamma/2) +- arccosh(Gamma^2/4)) / (2 kappa)
//! ```
//!
//! At every tau_4n the profile obeys x = e^{-Gamma t'}, so the entropy
//! extrema sit exactly on the envelope 2 e^{-Gamma t'}(1 - e^{-Gamma t'}).

use crate::ctrig::{cos_sinc_gamma, disc};
use crate::density::{sector_profile, LossSide};
use crate::error::{Error, Result};
use crate::metrics::{concurrence_closed, linear_entropy_osc1, x_function};
use crate::params::{classify_regime, Regime, CRITICAL_BAND};
use crate::roots::bisect;

const T_TOL: f64 = 1e-12;

/// What a critical-time entry marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    /// Concurrence zero of the tau_1n family (q = 0).
    ConcZero1,
    /// Concurrence zero of the tau_2n family (p = 0).
    ConcZero2,
    /// Underdamped local maximum on the K_+ curve.
    ConcMaxPlus,
    /// Underdamped local maximum on the K_- curve.
    ConcMaxMinus,
    /// Earlier of the two overdamped concurrence maxima.
    ConcMaxODEarly,
    /// Later of the two overdamped concurrence maxima.
    ConcMaxODLate,
    /// tau_4n that is a local minimum of the linear entropy.
    EntropyMin4n,
    /// tau_4n that is a local maximum of the linear entropy.
    EntropyMax4n,
    /// x(t') = 1/2 crossing (entropy touches its absolute maximum).
    EntropyHalfCross,
    /// First x(t') = 1/2 crossing; the first entropy maximum.
    EntropyFirstMax,
}

impl CriticalKind {
    pub fn name(&self) -> &'static str {
        match self {
            CriticalKind::ConcZero1 => "ConcZero1",
            CriticalKind::ConcZero2 => "ConcZero2",
            CriticalKind::ConcMaxPlus => "ConcMaxPlus",
            CriticalKind::ConcMaxMinus => "ConcMaxMinus",
            CriticalKind::ConcMaxODEarly => "ConcMaxODEarly",
            CriticalKind::ConcMaxODLate => "ConcMaxODLate",
            CriticalKind::EntropyMin4n => "EntropyMin4n",
            CriticalKind::EntropyMax4n => "EntropyMax4n",
            CriticalKind::EntropyHalfCross => "EntropyHalfCross",
            CriticalKind::EntropyFirstMax => "EntropyFirstMax",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalEntry {
    pub kind: CriticalKind,
    pub n: usize,
    pub t_prime: f64,
    /// Metric value at the time: concurrence for the Conc* kinds, linear
    /// entropy (at theta = pi/2 unless stated otherwise) for the Entropy*.
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CriticalTimeTable {
    pub entries: Vec<CriticalEntry>,
}

impl CriticalTimeTable {
    fn sorted(mut entries: Vec<CriticalEntry>) -> Self {
        entries.sort_by(|a, b| a.t_prime.partial_cmp(&b.t_prime).unwrap());
        Self { entries }
    }

    pub fn of_kind(&self, kind: CriticalKind) -> impl Iterator<Item = &CriticalEntry> {
        self.entries.iter().filter(move |e| e.kind == kind)
    }

    pub fn merge(mut self, other: CriticalTimeTable) -> Self {
        self.entries.extend(other.entries);
        Self::sorted(self.entries)
    }
}

fn require_underdamped(gamma_ratio: f64) -> Result<f64> {
    if classify_regime(gamma_ratio) != Regime::Underdamped || gamma_ratio < 0.0 {
        return Err(Error::WrongRegime {
            expected: "underdamped",
            gamma_ratio,
        });
    }
    Ok(disc(gamma_ratio).sqrt())
}

fn require_overdamped(gamma_ratio: f64) -> Result<f64> {
    if classify_regime(gamma_ratio) != Regime::Overdamped {
        return Err(Error::WrongRegime {
            expected: "overdamped",
            gamma_ratio,
        });
    }
    Ok((-disc(gamma_ratio)).sqrt())
}

/// Concurrence zeros tau_1n, tau_2n for n = 0..=n_max, interleaved in time.
pub fn conc_zeros_ud(gamma_ratio: f64, n_max: usize) -> Result<CriticalTimeTable> {
    let nu = require_underdamped(gamma_ratio)?;
    let phi = (gamma_ratio / 2.0).acos();
    let mut entries = Vec::with_capacity(2 * (n_max + 1));
    for n in 0..=n_max {
        let t1 = n as f64 * std::f64::consts::PI / nu;
        let t2 = (phi + n as f64 * std::f64::consts::PI) / nu;
        entries.push(CriticalEntry {
            kind: CriticalKind::ConcZero1,
            n,
            t_prime: t1,
            value: concurrence_closed(t1, gamma_ratio, std::f64::consts::FRAC_PI_2),
        });
        entries.push(CriticalEntry {
            kind: CriticalKind::ConcZero2,
            n,
            t_prime: t2,
            value: concurrence_closed(t2, gamma_ratio, std::f64::consts::FRAC_PI_2),
        });
    }
    Ok(CriticalTimeTable::sorted(entries))
}

/// Underdamped concurrence maxima tau_{+-n} with closed-form values C_{+-n}.
pub fn conc_maxima_ud(gamma_ratio: f64, theta: f64, n_max: usize) -> Result<CriticalTimeTable> {
    let nu = require_underdamped(gamma_ratio)?;
    let g2 = gamma_ratio / 2.0;
    let acos_sq = (g2 * g2).acos();
    let asin_half = g2.asin();
    let s2 = theta.sin() * theta.sin();
    let k_plus = (1.0 + g2 * g2).sqrt() + g2;
    let k_minus = (1.0 + g2 * g2).sqrt() - g2;
    let mut entries = Vec::with_capacity(2 * (n_max + 1));
    for n in 0..=n_max {
        let base = (2 * n + 1) as f64 * std::f64::consts::PI - 2.0 * asin_half;
        let t_minus = (base - acos_sq) / (2.0 * nu);
        let t_plus = (base + acos_sq) / (2.0 * nu);
        entries.push(CriticalEntry {
            kind: CriticalKind::ConcMaxMinus,
            n,
            t_prime: t_minus,
            value: s2 * k_minus * (-gamma_ratio * t_minus).exp(),
        });
        entries.push(CriticalEntry {
            kind: CriticalKind::ConcMaxPlus,
            n,
            t_prime: t_plus,
            value: s2 * k_plus * (-gamma_ratio * t_plus).exp(),
        });
    }
    Ok(CriticalTimeTable::sorted(entries))
}

/// Envelope constants K_- <= K_+ of the underdamped maxima curves.
pub fn envelope_constants(gamma_ratio: f64) -> (f64, f64) {
    let g2 = gamma_ratio / 2.0;
    let root = (1.0 + g2 * g2).sqrt();
    (root - g2, root + g2)
}

/// The two overdamped concurrence maxima; values at theta = pi/2.
pub fn conc_maxima_od(gamma_ratio: f64) -> Result<CriticalTimeTable> {
    let kappa = require_overdamped(gamma_ratio)?;
    let g2 = gamma_ratio / 2.0;
    let t_minus = (2.0 * g2.acosh() - (g2 * g2).acosh()) / (2.0 * kappa);
    let t_plus = (2.0 * g2.acosh() + (g2 * g2).acosh()) / (2.0 * kappa);
    let half_pi = std::f64::consts::FRAC_PI_2;
    Ok(CriticalTimeTable::sorted(vec![
        CriticalEntry {
            kind: CriticalKind::ConcMaxODEarly,
            n: 0,
            t_prime: t_minus,
            value: concurrence_closed(t_minus, gamma_ratio, half_pi),
        },
        CriticalEntry {
            kind: CriticalKind::ConcMaxODLate,
            n: 0,
            t_prime: t_plus,
            value: concurrence_closed(t_plus, gamma_ratio, half_pi),
        },
    ]))
}

/// First time x(t') reaches zero: the entropy returns to zero there and the
/// bisections below use it as a bracket edge.
pub fn first_zero_of_x(gamma_ratio: f64) -> f64 {
    match classify_regime(gamma_ratio) {
        Regime::Underdamped => (gamma_ratio / 2.0).acos() / disc(gamma_ratio).sqrt(),
        Regime::CriticallyDamped => 1.0,
        Regime::Overdamped => (gamma_ratio / 2.0).acosh() / (-disc(gamma_ratio)).sqrt(),
    }
}

/// First root of x(t') = 1/2 (the first linear-entropy maximum), by bisection
/// on (0, first zero of x). Defined for every Gamma >= 0.
pub fn entropy_half_crossing(gamma_ratio: f64) -> Result<f64> {
    if gamma_ratio < 0.0 {
        return Err(Error::InvalidParameter {
            name: "gamma_ratio",
            value: gamma_ratio,
            constraint: "must be >= 0",
        });
    }
    let hi = first_zero_of_x(gamma_ratio);
    bisect(|t| x_function(t, gamma_ratio) - 0.5, 0.0, hi, T_TOL)
}

/// Entropy extrema: the tau_4n family (classified min/max by the paper-rule
/// equivalent x(tau_4n) = e^{-Gamma tau_4n} >< 1/2), the x = 1/2 crossings
/// while the envelope stays above one half, and the first entropy maximum.
/// Values are linear entropies at theta = pi/2.
pub fn entropy_extrema(gamma_ratio: f64, n_max: usize) -> Result<CriticalTimeTable> {
    let nu = require_underdamped(gamma_ratio)?;
    let phi = (gamma_ratio / 2.0).acos();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut entries = Vec::new();

    let first_max = entropy_half_crossing(gamma_ratio)?;
    entries.push(CriticalEntry {
        kind: CriticalKind::EntropyFirstMax,
        n: 0,
        t_prime: first_max,
        value: linear_entropy_osc1(first_max, gamma_ratio, half_pi),
    });

    let tau2 = |n: usize| (phi + n as f64 * std::f64::consts::PI) / nu;
    let mut cross_count = 1usize;
    for n in 0..=n_max {
        let t4 = (2.0 * phi + n as f64 * std::f64::consts::PI) / nu;
        let x4 = x_function(t4, gamma_ratio);
        let kind = if x4 > 0.5 {
            CriticalKind::EntropyMin4n
        } else {
            CriticalKind::EntropyMax4n
        };
        entries.push(CriticalEntry {
            kind,
            n,
            t_prime: t4,
            value: linear_entropy_osc1(t4, gamma_ratio, half_pi),
        });
        // while the x oscillation still tops 1/2, each lobe crosses twice
        if x4 > 0.5 {
            let f = |t: f64| x_function(t, gamma_ratio) - 0.5;
            for (lo, hi) in [(tau2(n), t4), (t4, tau2(n + 1))] {
                if let Ok(t) = bisect(f, lo, hi, T_TOL) {
                    entries.push(CriticalEntry {
                        kind: CriticalKind::EntropyHalfCross,
                        n: cross_count,
                        t_prime: t,
                        value: linear_entropy_osc1(t, gamma_ratio, half_pi),
                    });
                    cross_count += 1;
                }
            }
        }
    }
    Ok(CriticalTimeTable::sorted(entries))
}

/// Closed-form approximations to the first half crossing, for comparison
/// against the bisection root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfCrossingApprox {
    /// The bisection root itself.
    pub bisection: f64,
    /// pi / (4 + 4 Gamma + 2 Gamma^2): small-Gamma approximation.
    pub poly_small_gamma: f64,
    /// Hyperbolic interpolation, defined for Gamma >= 2.
    pub od_interpolation: Option<f64>,
    /// ln 2 / (2 Gamma): the large-Gamma asymptote (None at Gamma = 0).
    pub large_gamma_asymptote: Option<f64>,
}

pub fn half_crossing_approximations(gamma_ratio: f64) -> Result<HalfCrossingApprox> {
    let bisection = entropy_half_crossing(gamma_ratio)?;
    let poly = std::f64::consts::PI / (4.0 + 4.0 * gamma_ratio + 2.0 * gamma_ratio * gamma_ratio);
    let od = if gamma_ratio >= 2.0 - CRITICAL_BAND {
        let u = (gamma_ratio / 2.0).max(1.0).acosh();
        Some(1.0 / (6.0 + 4.0 / std::f64::consts::LN_2 * (u * (u / 1.6).tanh()).sinh()))
    } else {
        None
    };
    let asym = if gamma_ratio > 0.0 {
        Some(std::f64::consts::LN_2 / (2.0 * gamma_ratio))
    } else {
        None
    };
    Ok(HalfCrossingApprox {
        bisection,
        poly_small_gamma: poly,
        od_interpolation: od,
        large_gamma_asymptote: asym,
    })
}

/// Asymptotic relation between the entropy half-crossing time and the first
/// (global) overdamped concurrence maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfTimeMaxRelation {
    /// tau_0.5 / tau_- ; tends to 1/2 for large Gamma.
    pub half_over_max_time: f64,
    /// delta1(tau_-) / 0.5 at theta = pi/2; tends to 3/4.
    pub entropy_at_max_over_peak: f64,
}

pub fn half_time_vs_max_relation(gamma_ratio: f64) -> Result<HalfTimeMaxRelation> {
    let table = conc_maxima_od(gamma_ratio)?;
    let t_minus = table
        .of_kind(CriticalKind::ConcMaxODEarly)
        .next()
        .expect("early OD maximum present")
        .t_prime;
    let tau_half = entropy_half_crossing(gamma_ratio)?;
    let d1 = linear_entropy_osc1(t_minus, gamma_ratio, std::f64::consts::FRAC_PI_2);
    Ok(HalfTimeMaxRelation {
        half_over_max_time: tau_half / t_minus,
        entropy_at_max_over_peak: d1 / 0.5,
    })
}

/// Stationarity factor of the concurrence: on intervals where S p keeps its
/// sign, dC/dt' is proportional to e^{-Gamma t'} times this.
pub fn conc_stationarity(gamma_ratio: f64, t_prime: f64) -> f64 {
    let d = disc(gamma_ratio);
    let (c, s) = cos_sinc_gamma(gamma_ratio, t_prime);
    c * c - d * s * s - 2.0 * gamma_ratio * c * s
        + 0.5 * gamma_ratio * gamma_ratio * s * s
}

/// Numerically bracketed underdamped maxima (tau_-n, tau_+n) for n = 0..=n_max,
/// found as sign changes of [`conc_stationarity`] between consecutive zeros.
/// Independent of the closed-form maxima expressions.
pub fn numeric_conc_maxima_ud(gamma_ratio: f64, n_max: usize) -> Result<Vec<(f64, f64)>> {
    let nu = require_underdamped(gamma_ratio)?;
    let phi = (gamma_ratio / 2.0).acos();
    let f = |t: f64| conc_stationarity(gamma_ratio, t);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t1 = n as f64 * std::f64::consts::PI / nu;
        let t2 = (phi + n as f64 * std::f64::consts::PI) / nu;
        let t1next = (n + 1) as f64 * std::f64::consts::PI / nu;
        let minus = bisect(f, t1, t2, T_TOL)?;
        let plus = bisect(f, t2, t1next, T_TOL)?;
        out.push((minus, plus));
    }
    Ok(out)
}

/// Numerically bracketed overdamped maxima (tau_-, tau_+), from sign changes
/// of [`conc_stationarity`] around the single concurrence zero.
pub fn numeric_conc_maxima_od(gamma_ratio: f64) -> Result<(f64, f64)> {
    let kappa = require_overdamped(gamma_ratio)?;
    let t0 = (gamma_ratio / 2.0).acosh() / kappa;
    let f = |t: f64| conc_stationarity(gamma_ratio, t);
    let minus = bisect(&f, 0.0, t0, T_TOL)?;
    let mut hi = t0 * 2.0;
    for _ in 0..200 {
        if f(hi) > 0.0 {
            break;
        }
        hi *= 1.5;
    }
    let plus = bisect(&f, t0, hi, T_TOL)?;
    Ok((minus, plus))
}

/// Golden-section refinement of a concurrence maximum inside [lo, hi].
pub fn golden_conc_max(gamma_ratio: f64, theta: f64, lo: f64, hi: f64) -> f64 {
    crate::roots::golden_max(
        |t| concurrence_closed(t, gamma_ratio, theta),
        lo,
        hi,
        1e-12,
    )
}

/// Check that t is a local maximum of the concurrence by second differences.
pub fn is_conc_local_max(gamma_ratio: f64, theta: f64, t: f64, h: f64) -> bool {
    let c0 = concurrence_closed(t, gamma_ratio, theta);
    let cm = concurrence_closed(t - h, gamma_ratio, theta);
    let cp = concurrence_closed(t + h, gamma_ratio, theta);
    cm <= c0 && cp <= c0
}

/// Convenience: the profile pair (p, q) of the closed-form family.
pub fn profile(gamma_ratio: f64, t_prime: f64) -> (f64, f64) {
    sector_profile(gamma_ratio, t_prime, LossSide::First)
}
