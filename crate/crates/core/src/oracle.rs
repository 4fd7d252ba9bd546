//! Brute-force master-equation integrator on a truncated two-mode Fock
//! space: the independent check on every closed form in this crate.
//!
//! The equation of motion is
//!
//! ```text
//! d rho / dt = -(i/hbar) [H, rho] + gamma (2 a rho a+ - a+a rho - rho a+a)
//! ```
//!
//! with H the two free oscillators, the excitation-conserving coupling
//! g (a+b + a b+) and the resonant drive i hbar eps (e^{-i w t} a+ - e^{i w t} a);
//! the loss channel acts on the second oscillator (operator a). Everything
//! is integrated in the frame rotating at omega, where the drive is static
//! and the step size is set by g and gamma alone — Omega may be 1e6 without
//! cost. Sampled states are therefore rotating-frame states;
//! [`displaced_block`] restores the lab-frame phases on the two-qubit block.
//!
//! Two frames are offered:
//!
//! * [`Frame::Lab`] — the full equation above, from the physical initial
//!   state (superposed first oscillator, coherent second oscillator). The
//!   mode-1 displacement grows to |beta| = eps/g, so the truncation must
//!   accommodate it; affordable for Gamma <= ~1.
//! * [`Frame::CoMoving`] — the same equation transported by the two-mode
//!   displacement built from the label trajectories (which the label module
//!   verifies against their defining ODE): the drive drops out and the
//!   state stays within a few Fock levels of vacuum at every Gamma.
//!
//! The loss channel can be moved to the first oscillator in the co-moving
//! frame ([`Generator::co_moving_loss_on_first`]); that variant reproduces
//! the closed-form family of [`crate::density::rho_tilde`] and is used to
//! cross-validate the integrator against the closed forms.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::density::TwoQubitDensity;
use crate::error::{Error, Result};
use crate::fock::{self, FockDensity, LEAKAGE_LIMIT};
use crate::params::SystemParams;
use crate::rk::{self, StepperConfig};

/// Which frame the generator lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    Lab,
    CoMoving,
}

/// Which oscillator loses excitations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossChannel {
    SecondOscillator,
    FirstOscillator,
}

/// Right-hand-side applier for d rho / dt' on the truncated space.
#[derive(Debug, Clone)]
pub struct Generator {
    pub frame: Frame,
    pub loss: LossChannel,
    pub n_max1: usize,
    pub n_max2: usize,
    /// Coupling rate in integrator time units (1 when time is t' = g t).
    coupling: f64,
    /// Loss rate in integrator time units (Gamma when time is t').
    gamma: f64,
    /// Drive amplitude in integrator time units (eps/g in the lab frame, 0 co-moving).
    drive: f64,
}

impl Generator {
    /// Full lab-frame generator (rotating at omega), loss on the second
    /// oscillator, time measured in t' = g t.
    pub fn lab(params: &SystemParams, n_max1: usize, n_max2: usize) -> Self {
        Self {
            frame: Frame::Lab,
            loss: LossChannel::SecondOscillator,
            n_max1,
            n_max2,
            coupling: 1.0,
            gamma: params.gamma / params.g,
            drive: params.epsilon_ratio(),
        }
    }

    /// Displacement-co-moving generator: same coupling and loss, no drive.
    pub fn co_moving(params: &SystemParams, n_max1: usize, n_max2: usize) -> Self {
        Self {
            frame: Frame::CoMoving,
            loss: LossChannel::SecondOscillator,
            n_max1,
            n_max2,
            coupling: 1.0,
            gamma: params.gamma / params.g,
            drive: 0.0,
        }
    }

    /// Co-moving generator with the loss channel moved to the first
    /// oscillator; reproduces the closed-form family (diagnostic).
    pub fn co_moving_loss_on_first(params: &SystemParams, n_max1: usize, n_max2: usize) -> Self {
        Self {
            loss: LossChannel::FirstOscillator,
            ..Self::co_moving(params, n_max1, n_max2)
        }
    }

    /// Arbitrary rates in an arbitrary time unit (tests of limiting cases:
    /// `coupling = 0` decouples the modes, making the time unit 1/gamma).
    pub fn from_rates(
        coupling: f64,
        gamma: f64,
        drive: f64,
        loss: LossChannel,
        n_max1: usize,
        n_max2: usize,
    ) -> Self {
        Self {
            frame: Frame::Lab,
            loss,
            n_max1,
            n_max2,
            coupling,
            gamma,
            drive,
        }
    }

    pub fn dim(&self) -> usize {
        (self.n_max1 + 1) * (self.n_max2 + 1)
    }

    /// out = d rho / dt at the current rho. The generator is autonomous in
    /// the rotating frame.
    pub fn apply(&self, rho: &Array2<C64>, out: &mut Array2<C64>) {
        let d1 = self.n_max1 + 1;
        let d2 = self.n_max2 + 1;
        let idx = |n1: usize, n2: usize| n1 * d2 + n2;
        out.fill(C64::new(0.0, 0.0));
        let i = C64::new(0.0, 1.0);
        let g = self.coupling;
        let eps = self.drive;
        let gam = self.gamma;

        // sqrt lookup
        let root: Vec<f64> = (0..=(d1.max(d2))).map(|n| (n as f64).sqrt()).collect();

        for m1 in 0..d1 {
            for m2 in 0..d2 {
                let r = idx(m1, m2);
                for n1 in 0..d1 {
                    for n2 in 0..d2 {
                        let c = idx(n1, n2);
                        let mut acc = C64::new(0.0, 0.0);

                        // -i (H rho - rho H), coupling part H_c = g (a+b + a b+)
                        if g != 0.0 {
                            // (H_c rho)[m, n]
                            if m1 + 1 <= self.n_max1 && m2 >= 1 {
                                acc -= i * g * root[m1 + 1] * root[m2] * rho[[idx(m1 + 1, m2 - 1), c]];
                            }
                            if m1 >= 1 && m2 + 1 <= self.n_max2 {
                                acc -= i * g * root[m1] * root[m2 + 1] * rho[[idx(m1 - 1, m2 + 1), c]];
                            }
                            // + i (rho H_c)[m, n]
                            if n1 + 1 <= self.n_max1 && n2 >= 1 {
                                acc += i * g * root[n1 + 1] * root[n2] * rho[[r, idx(n1 + 1, n2 - 1)]];
                            }
                            if n1 >= 1 && n2 + 1 <= self.n_max2 {
                                acc += i * g * root[n1] * root[n2 + 1] * rho[[r, idx(n1 - 1, n2 + 1)]];
                            }
                        }

                        // drive V = i eps (a+ - a) on mode 2: -i [V, rho] = eps [a+ - a, rho]...
                        // -i (V rho)[m,n] = eps ( (a+ rho)[m,n]... ) expanded directly:
                        if eps != 0.0 {
                            // -i * i eps (a+ rho) = eps (a+ rho)
                            if m2 >= 1 {
                                acc += eps * root[m2] * rho[[idx(m1, m2 - 1), c]];
                            }
                            // -i * (-i eps) (a rho) = -eps (a rho)
                            if m2 + 1 <= self.n_max2 {
                                acc -= eps * root[m2 + 1] * rho[[idx(m1, m2 + 1), c]];
                            }
                            // +i (rho V): +i (rho i eps a+) = -eps (rho a+)
                            if n2 + 1 <= self.n_max2 {
                                acc -= eps * root[n2 + 1] * rho[[r, idx(n1, n2 + 1)]];
                            }
                            // +i (rho (-i eps) a) = +eps (rho a)
                            if n2 >= 1 {
                                acc += eps * root[n2] * rho[[r, idx(n1, n2 - 1)]];
                            }
                        }

                        // dissipator
                        if gam != 0.0 {
                            match self.loss {
                                LossChannel::SecondOscillator => {
                                    if m2 + 1 <= self.n_max2 && n2 + 1 <= self.n_max2 {
                                        acc += 2.0
                                            * gam
                                            * root[m2 + 1]
                                            * root[n2 + 1]
                                            * rho[[idx(m1, m2 + 1), idx(n1, n2 + 1)]];
                                    }
                                    acc -= gam * (m2 + n2) as f64 * rho[[r, c]];
                                }
                                LossChannel::FirstOscillator => {
                                    if m1 + 1 <= self.n_max1 && n1 + 1 <= self.n_max1 {
                                        acc += 2.0
                                            * gam
                                            * root[m1 + 1]
                                            * root[n1 + 1]
                                            * rho[[idx(m1 + 1, m2), idx(n1 + 1, n2)]];
                                    }
                                    acc -= gam * (m1 + n1) as f64 * rho[[r, c]];
                                }
                            }
                        }

                        out[[r, c]] = acc;
                    }
                }
            }
        }
    }
}

/// Step-error tolerances and output grid for [`evolve`].
#[derive(Debug, Clone, PartialEq)]
pub struct IntegratorConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub t_end: f64,
    pub sample_times: Vec<f64>,
}

impl IntegratorConfig {
    /// Uniform grid of `n` samples on [0, t_end] (t = 0 included).
    pub fn to(t_end: f64, n: usize) -> Result<Self> {
        if !(t_end > 0.0) || n < 2 {
            return Err(Error::InvalidParameter {
                name: "t_end/samples",
                value: t_end,
                constraint: "need t_end > 0 and at least two samples",
            });
        }
        let sample_times = (0..n)
            .map(|k| t_end * k as f64 / (n - 1) as f64)
            .collect();
        Ok(Self {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            t_end,
            sample_times,
        })
    }

    pub fn with_tols(mut self, rel: f64, abs: f64) -> Self {
        self.rel_tol = rel;
        self.abs_tol = abs;
        self
    }
}

/// One sampled state along a trajectory (rotating frame).
#[derive(Debug, Clone)]
pub struct TrajectorySample {
    pub t_prime: f64,
    pub rho: FockDensity,
}

const TRACE_DRIFT_LIMIT: f64 = 1e-8;

/// Lab-frame initial state: (cos th |0> + sin th |1>) on mode 1, coherent
/// |eps/gamma> on mode 2.
pub fn initial_state(params: &SystemParams, n_max1: usize, n_max2: usize) -> Result<FockDensity> {
    if params.gamma <= 0.0 {
        return Err(Error::NoSteadyState {
            gamma: params.gamma,
        });
    }
    if n_max1 < 1 || n_max2 < 1 {
        return Err(Error::InvalidParameter {
            name: "n_max",
            value: n_max1.min(n_max2) as f64,
            constraint: "truncation must be >= 1",
        });
    }
    let mut psi1: Array1<C64> = Array1::zeros(n_max1 + 1);
    psi1[0] = C64::new(params.theta.cos(), 0.0);
    psi1[1] = C64::new(params.theta.sin(), 0.0);
    let alpha0 = C64::new(params.epsilon / params.gamma, 0.0);
    let psi2 = fock::coherent_state(n_max2, alpha0);
    let rho = FockDensity::from_product(n_max1, n_max2, &psi1, &psi2);
    rho.check_leakage(LEAKAGE_LIMIT)?;
    Ok(rho)
}

/// Displaced-frame initial state: the same superposition on mode 1, vacuum
/// on mode 2.
pub fn initial_state_displaced(theta: f64, n_max1: usize, n_max2: usize) -> FockDensity {
    let mut psi1: Array1<C64> = Array1::zeros(n_max1 + 1);
    psi1[0] = C64::new(theta.cos(), 0.0);
    psi1[1] = C64::new(theta.sin(), 0.0);
    let mut psi2: Array1<C64> = Array1::zeros(n_max2 + 1);
    psi2[0] = C64::new(1.0, 0.0);
    FockDensity::from_product(n_max1, n_max2, &psi1, &psi2)
}

/// Integrate the master equation, sampling at the configured times.
///
/// After every accepted step the state is symmetrized and the trace-drift
/// and truncation-leakage guards are enforced.
pub fn evolve(
    rho0: &FockDensity,
    generator: &Generator,
    config: &IntegratorConfig,
) -> Result<Vec<TrajectorySample>> {
    assert_eq!(rho0.dim(), generator.dim(), "state/generator dimension mismatch");
    let mut times: Vec<f64> = config.sample_times.clone();
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if times.iter().any(|&t| t < 0.0 || t > config.t_end + 1e-12) {
        return Err(Error::InvalidParameter {
            name: "sample_times",
            value: 0.0,
            constraint: "samples must lie in [0, t_end]",
        });
    }

    let cfg = StepperConfig {
        rel_tol: config.rel_tol,
        abs_tol: config.abs_tol,
        max_step: f64::INFINITY,
    };
    let (n1, n2) = (generator.n_max1, generator.n_max2);
    let (d1, d2) = (n1 + 1, n2 + 1);
    let guard = move |t: f64, y: &mut Array2<C64>| -> Result<()> {
        crate::linalg::hermitize(y);
        let tr = crate::linalg::trace(y).re;
        let drift = (tr - 1.0).abs();
        if drift > TRACE_DRIFT_LIMIT {
            return Err(Error::TraceDrift {
                t_prime: t,
                drift,
                limit: TRACE_DRIFT_LIMIT,
            });
        }
        let top1: f64 = (0..d2).map(|k| y[[n1 * d2 + k, n1 * d2 + k]].re).sum();
        let top2: f64 = (0..d1).map(|k| y[[k * d2 + n2, k * d2 + n2]].re).sum();
        if top1 > LEAKAGE_LIMIT {
            return Err(Error::TruncationLeakage {
                mode: 1,
                population: top1,
                limit: LEAKAGE_LIMIT,
            });
        }
        if top2 > LEAKAGE_LIMIT {
            return Err(Error::TruncationLeakage {
                mode: 2,
                population: top2,
                limit: LEAKAGE_LIMIT,
            });
        }
        Ok(())
    };

    let mut out = Vec::with_capacity(times.len());
    let mut t_cur = 0.0;
    let mut state = rho0.as_array().clone();
    for &t in &times {
        if t > t_cur {
            state = rk::integrate(
                |_t, y, dy| generator.apply(y, dy),
                t_cur,
                t,
                state,
                &cfg,
                |tt, y| guard(tt, y),
            )?;
            t_cur = t;
        }
        out.push(TrajectorySample {
            t_prime: t,
            rho: FockDensity::new(n1, n2, state.clone()),
        });
    }
    Ok(out)
}

/// Displace a rotating-frame state back by the rotating labels, read the
/// {0,1} x {0,1} block, and restore the lab-frame phases e^{-i Omega t (N_r - N_c)}.
/// Returns the block and its trace (near 1 for this state family).
pub fn displaced_block(
    rho_rotating: &FockDensity,
    alpha_rotating: C64,
    beta_rotating: C64,
    omega_ratio: f64,
    t_prime: f64,
) -> (TwoQubitDensity, f64) {
    let back = rho_rotating.displaced_back(beta_rotating, alpha_rotating);
    let block = back.two_qubit_block();
    let excitations = [0.0f64, 1.0, 1.0, 2.0];
    let mut m = Array2::zeros((4, 4));
    for r in 0..4 {
        for c in 0..4 {
            let phase = C64::from_polar(1.0, -omega_ratio * t_prime * (excitations[r] - excitations[c]));
            m[[r, c]] = phase * block.element(r, c);
        }
    }
    let out = TwoQubitDensity::from_array(m);
    let tr = out.trace();
    (out, tr)
}

/// Scalar observables of a two-mode state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observables {
    pub purity_osc1: f64,
    pub linear_entropy_osc1: f64,
    pub mean_photons_1: f64,
    pub mean_photons_2: f64,
}

pub fn observables(rho: &FockDensity) -> Observables {
    let r1 = rho.reduced_osc1();
    let r2 = rho.reduced_osc2();
    let purity = fock::purity(&r1);
    Observables {
        purity_osc1: purity,
        linear_entropy_osc1: 1.0 - purity,
        mean_photons_1: fock::mean_photons(&r1),
        mean_photons_2: fock::mean_photons(&r2),
    }
}

/// Lab-frame generator per the model definition (loss on the second
/// oscillator, rotating frame).
pub fn build_generator(params: &SystemParams, n_max1: usize, n_max2: usize) -> Generator {
    Generator::lab(params, n_max1, n_max2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{rho_tilde, rho_tilde_loss_on_second};
    use crate::labels;
    use crate::params::make_params;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn params(gamma_ratio: f64, theta: f64) -> SystemParams {
        make_params(1.0, gamma_ratio, 1.0, gamma_ratio, theta).unwrap().0
    }

    #[test]
    fn generator_preserves_trace() {
        let p = params(1.0, FRAC_PI_4);
        for gen in [
            Generator::lab(&p, 3, 5),
            Generator::co_moving(&p, 3, 5),
            Generator::co_moving_loss_on_first(&p, 3, 5),
        ] {
            // pseudo-random Hermitian test matrix
            let d = gen.dim();
            let mut state = 0xabcdef1234567u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
            };
            let mut rho = Array2::zeros((d, d));
            for i in 0..d {
                for j in 0..d {
                    rho[[i, j]] = C64::new(next(), next());
                }
            }
            crate::linalg::hermitize(&mut rho);
            let mut drho = Array2::zeros((d, d));
            gen.apply(&rho, &mut drho);
            assert!(crate::linalg::trace(&drho).norm() < 1e-12);
        }
    }

    #[test]
    fn free_decay_population() {
        // decoupled, undriven: |0,1><0,1| decays as e^{-2 gamma t}
        let gen = Generator::from_rates(0.0, 1.0, 0.0, LossChannel::SecondOscillator, 1, 3);
        let mut psi2: Array1<C64> = Array1::zeros(4);
        psi2[1] = C64::new(1.0, 0.0);
        let mut psi1: Array1<C64> = Array1::zeros(2);
        psi1[0] = C64::new(1.0, 0.0);
        let rho0 = FockDensity::from_product(1, 3, &psi1, &psi2);
        let cfg = IntegratorConfig::to(1.5, 4).unwrap();
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        for s in &samples {
            let pop = s.rho.as_array()[[s.rho.index(0, 1), s.rho.index(0, 1)]].re;
            let expect = (-2.0 * s.t_prime).exp();
            assert!((pop - expect).abs() < 1e-8, "t={} {} vs {}", s.t_prime, pop, expect);
        }
    }

    #[test]
    fn driven_mode_reaches_coherent_steady_state() {
        // decoupled, driven and damped from vacuum: <n> -> (eps/gamma)^2 = 1
        let gen = Generator::from_rates(0.0, 1.0, 1.0, LossChannel::SecondOscillator, 1, 14);
        let rho0 = initial_state_displaced(0.0, 1, 14);
        let cfg = IntegratorConfig::to(12.0, 3).unwrap();
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        let last = samples.last().unwrap();
        let n2 = fock::mean_photons(&last.rho.reduced_osc2());
        assert!((n2 - 1.0).abs() < 1e-4, "<n> = {n2}");
        // driven loss keeps coherent states coherent: mode 2 stays pure
        let obs = observables(&last.rho);
        assert!((fock::purity(&last.rho.reduced_osc2()) - 1.0).abs() < 1e-6);
        assert!(obs.purity_osc1 > 1.0 - 1e-10);
    }

    #[test]
    fn co_moving_block_matches_loss_on_second_family() {
        for &(gr, th) in &[(0.5, FRAC_PI_4), (1.0, FRAC_PI_2), (3.0, 0.6)] {
            let p = params(gr, th);
            let gen = Generator::co_moving(&p, 4, 12);
            let rho0 = initial_state_displaced(th, 4, 12);
            let cfg = IntegratorConfig::to(4.0, 5).unwrap().with_tols(1e-10, 1e-13);
            let samples = evolve(&rho0, &gen, &cfg).unwrap();
            for s in &samples {
                let (block, tr) = displaced_block(
                    &s.rho,
                    C64::new(0.0, 0.0),
                    C64::new(0.0, 0.0),
                    1.0,
                    s.t_prime,
                );
                assert!((tr - 1.0).abs() < 1e-9);
                let closed = rho_tilde_loss_on_second(s.t_prime, gr, 1.0, th);
                let dev = block.max_abs_diff(&closed);
                assert!(dev < 1e-8, "gr={gr} th={th} t={}: dev {dev:.2e}", s.t_prime);
            }
        }
    }

    #[test]
    fn co_moving_loss_on_first_reproduces_closed_family() {
        let (gr, th) = (1.0, FRAC_PI_4);
        let p = params(gr, th);
        let gen = Generator::co_moving_loss_on_first(&p, 4, 12);
        let rho0 = initial_state_displaced(th, 4, 12);
        let cfg = IntegratorConfig::to(3.0, 4).unwrap().with_tols(1e-10, 1e-13);
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        for s in &samples {
            let (block, _) = displaced_block(
                &s.rho,
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                1.0,
                s.t_prime,
            );
            let closed = rho_tilde(s.t_prime, gr, 1.0, th);
            let dev = block.max_abs_diff(&closed);
            assert!(dev < 1e-8, "t={}: dev {dev:.2e}", s.t_prime);
        }
    }

    #[test]
    fn lab_frame_matches_co_moving_through_displacement() {
        // full-stack consistency of the displacement transformation;
        // |beta| grows to eps/g = 1, so mode 1 needs ~14 levels to keep the
        // top-level population under the 1e-8 leakage guard
        let (gr, th) = (1.0, FRAC_PI_4);
        let p = params(gr, th);
        let gen = Generator::lab(&p, 14, 12);
        let rho0 = initial_state(&p, 14, 12).unwrap();
        let cfg = IntegratorConfig::to(2.0, 3).unwrap().with_tols(1e-9, 1e-12);
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        for s in &samples {
            let (a_rot, b_rot) = labels::labels_rotating(&p, s.t_prime).unwrap();
            let (block, tr) = displaced_block(&s.rho, a_rot, b_rot, 1.0, s.t_prime);
            assert!(tr > 1.0 - 1e-6, "block trace {tr}");
            let closed = rho_tilde_loss_on_second(s.t_prime, gr, 1.0, th);
            let dev = block.max_abs_diff(&closed);
            assert!(dev < 2e-6, "t={}: dev {dev:.2e}", s.t_prime);
        }
    }

    #[test]
    fn ground_start_stays_pure_product_of_labels() {
        let p = params(1.0, 0.0);
        let gen = Generator::lab(&p, 12, 12);
        let rho0 = initial_state(&p, 12, 12).unwrap();
        let cfg = IntegratorConfig::to(2.5, 3).unwrap();
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        for s in &samples {
            let obs = observables(&s.rho);
            assert!((obs.purity_osc1 - 1.0).abs() < 1e-7, "purity {}", obs.purity_osc1);
            // displacing back by the labels must land on the joint vacuum
            let (a_rot, b_rot) = labels::labels_rotating(&p, s.t_prime).unwrap();
            let back = s.rho.displaced_back(b_rot, a_rot);
            let vac = back.as_array()[[0, 0]].re;
            assert!((vac - 1.0).abs() < 1e-7, "t={} vacuum {vac}", s.t_prime);
        }
    }

    #[test]
    fn mode1_excitations_approach_drive_ratio_squared() {
        // t >> 2/Gamma: mean photons of oscillator 1 -> (eps/g)^2
        let p = params(1.0, 0.0);
        let gen = Generator::lab(&p, 12, 12);
        let rho0 = initial_state(&p, 12, 12).unwrap();
        let cfg = IntegratorConfig::to(25.0, 2).unwrap();
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        let obs = observables(&samples.last().unwrap().rho);
        let expect = p.epsilon_ratio() * p.epsilon_ratio();
        assert!(
            (obs.mean_photons_1 - expect).abs() < 1e-4,
            "n1 = {} vs {expect}",
            obs.mean_photons_1
        );
        assert!(obs.mean_photons_2 < 1e-4);
    }

    #[test]
    fn population_envelope_decays_at_gamma() {
        // oracle block population of |10> touches e^{-Gamma t} at t = n pi / nu
        let (gr, th) = (1.0, FRAC_PI_2);
        let p = params(gr, th);
        let gen = Generator::co_moving(&p, 4, 12);
        let rho0 = initial_state_displaced(th, 4, 12);
        let nu = (1.0f64 - gr * gr / 4.0).sqrt();
        let touch: Vec<f64> = (1..4).map(|n| n as f64 * std::f64::consts::PI / nu).collect();
        let mut cfg = IntegratorConfig::to(*touch.last().unwrap(), 2).unwrap();
        cfg.sample_times = touch.clone();
        let samples = evolve(&rho0, &gen, &cfg).unwrap();
        // least-squares slope of ln(pop) vs t
        let pts: Vec<(f64, f64)> = samples
            .iter()
            .map(|s| {
                let pop = s.rho.as_array()[[s.rho.index(1, 0), s.rho.index(1, 0)]].re;
                (s.t_prime, pop.ln())
            })
            .collect();
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert!(
            (slope + gr).abs() < 0.1 * gr,
            "envelope rate {slope} vs -{gr}"
        );
    }

    #[test]
    fn truncation_is_converged() {
        let (gr, th) = (1.0, FRAC_PI_2);
        let p = params(gr, th);
        let run = |n2: usize| -> f64 {
            let gen = Generator::co_moving(&p, 4, n2);
            let rho0 = initial_state_displaced(th, 4, n2);
            let cfg = IntegratorConfig::to(1.0, 2).unwrap().with_tols(1e-10, 1e-13);
            let samples = evolve(&rho0, &gen, &cfg).unwrap();
            let (block, _) = displaced_block(
                &samples.last().unwrap().rho,
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                1.0,
                1.0,
            );
            crate::metrics::concurrence_wootters(&block).unwrap()
        };
        assert!((run(12) - run(24)).abs() <= 1e-6);
    }

    #[test]
    fn initial_state_leakage_error_suggests_bigger_truncation() {
        // coherent amplitude 2 in a 4-level mode overflows
        let p = make_params(1.0, 1.0, 1.0, 2.0, 0.3).unwrap().0;
        match initial_state(&p, 1, 4) {
            Err(Error::TruncationLeakage { mode: 2, .. }) => {}
            other => panic!("expected leakage error, got {other:?}"),
        }
    }
}
