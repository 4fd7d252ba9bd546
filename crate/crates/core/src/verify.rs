//! Verification battery: every analytic identity, critical-time property and
//! closed-form/integrator comparison, with measured errors and pass/fail
//! against fixed tolerances.
//!
//! The same checks back the acceptance test suite and the `verify` CLI
//! command. Two checks measure a known systematic discrepancy and fail by
//! design: the closed-form family corresponds to a loss channel on the
//! first oscillator, while the model's master equation damps the second
//! (the companion checks pin the integrator to the matching family at
//! 1e-6), and the zero-dissipation entropy identity holds with C^2/2, not
//! C^2/4. See the README's verification notes.

use num_complex::Complex64 as C64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};

use crate::critical::{
    self, conc_maxima_od, conc_maxima_ud, conc_zeros_ud, entropy_half_crossing, CriticalKind,
};
use crate::density::{rho_tilde, rho_tilde_loss_on_second};
use crate::fock;
use crate::labels;
use crate::metrics::{concurrence_closed, concurrence_wootters, linear_entropy_osc1, x_function};
use crate::oracle::{self, Generator, IntegratorConfig};
use crate::params::{make_params, SystemParams};

/// How much of the battery to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Closed-form checks plus a reduced master-equation grid.
    Quick,
    /// Everything, including the full equivalence grid and lab-frame runs.
    Full,
}

/// Pass/fail rule for a check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    Within { lo: f64, hi: f64 },
    /// Reported, not asserted.
    Info,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    pub pass: bool,
    pub note: Option<String>,
}

impl Check {
    fn at_most(name: impl Into<String>, measured: f64, limit: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            bound: Bound::AtMost(limit),
            pass: measured <= limit,
            note: None,
        }
    }

    fn within(name: impl Into<String>, measured: f64, lo: f64, hi: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            bound: Bound::Within { lo, hi },
            pass: measured >= lo && measured <= hi,
            note: None,
        }
    }

    fn info(name: impl Into<String>, measured: f64, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            measured,
            bound: Bound::Info,
            pass: true,
            note: Some(note.into()),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// One-line rendering for reports.
    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let bound = match self.bound {
            Bound::AtMost(l) => format!("<= {l:.3e}"),
            Bound::Within { lo, hi } => format!("in [{lo}, {hi}]"),
            Bound::Info => "(info)".to_string(),
        };
        let note = self
            .note
            .as_ref()
            .map(|n| format!("  [{n}]"))
            .unwrap_or_default();
        format!(
            "{verdict}  {}: measured {:.6e} {bound}{note}",
            self.name, self.measured
        )
    }
}

fn std_params(gamma_ratio: f64, omega_ratio: f64, theta: f64) -> SystemParams {
    // g = 1, eps = gamma (the model's natural drive strength)
    make_params(omega_ratio, gamma_ratio, 1.0, gamma_ratio, theta)
        .unwrap()
        .0
}

/// Criterion 1: centered finite differences of the closed-form labels match
/// the label ODE right-hand side.
pub fn criterion1_ode_consistency() -> Vec<Check> {
    let h = 1e-6;
    let mut checks = Vec::new();
    for &gr in &[0.5, 2.0, 3.0] {
        for &or in &[1.0, 10.0] {
            let p = std_params(gr, or, FRAC_PI_2);
            let mut worst: f64 = 0.0;
            let mut scale: f64 = 0.0;
            for k in 0..200 {
                let t = 20.0 * k as f64 / 199.0 + h;
                let lp = labels::labels_of_t(&p, t + h).unwrap();
                let lm = labels::labels_of_t(&p, t - h).unwrap();
                let l0 = labels::labels_of_t(&p, t).unwrap();
                let fd_a = (lp.alpha - lm.alpha) / (2.0 * h);
                let fd_b = (lp.beta - lm.beta) / (2.0 * h);
                let (ra, rb) = labels::label_ode_rhs(l0.alpha, l0.beta, &p, t);
                scale = scale.max(ra.norm()).max(rb.norm());
                worst = worst.max((fd_a - ra).norm()).max((fd_b - rb).norm());
            }
            checks.push(Check::at_most(
                format!("1. label ODE residual (Gamma={gr}, Omega={or})"),
                worst / scale,
                1e-7,
            ));
        }
    }
    checks
}

fn oracle_block_at(
    samples: &[oracle::TrajectorySample],
    omega_ratio: f64,
) -> Vec<(f64, crate::density::TwoQubitDensity)> {
    samples
        .iter()
        .map(|s| {
            let (block, _) = oracle::displaced_block(
                &s.rho,
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                omega_ratio,
                s.t_prime,
            );
            (s.t_prime, block)
        })
        .collect()
}

/// Criterion 2: element-wise equivalence of the closed-form displaced state
/// with the master-equation integrator, plus concurrence and entropy
/// agreement. Known to fail: the companion checks show the integrator
/// matches the loss-on-second-oscillator family instead.
pub fn criterion2_oracle_equivalence(profile: Profile) -> Vec<Check> {
    let (gammas, thetas, t_end, n_samples): (&[f64], &[f64], f64, usize) = match profile {
        Profile::Full => (
            &[0.5, 1.0, 1.9, 2.0, 3.0, 5.0],
            &[PI / 8.0, FRAC_PI_4, FRAC_PI_2],
            10.0,
            50,
        ),
        Profile::Quick => (&[1.0, 2.0], &[FRAC_PI_4, FRAC_PI_2], 5.0, 20),
    };
    let mut dev_elem_all: f64 = 0.0;
    let mut dev_c_all: f64 = 0.0;
    let mut dev_d1_all: f64 = 0.0;
    let mut dev_companion: f64 = 0.0;
    let mut checks = Vec::new();
    for &gr in gammas {
        let mut dev_elem_g: f64 = 0.0;
        for &th in thetas {
            let p = std_params(gr, 1.0, th);
            let gen = Generator::co_moving(&p, 4, 12);
            let rho0 = oracle::initial_state_displaced(th, 4, 12);
            let cfg = IntegratorConfig::to(t_end, n_samples)
                .unwrap()
                .with_tols(1e-9, 1e-12);
            let samples = oracle::evolve(&rho0, &gen, &cfg).expect("oracle run");
            for (t, block) in oracle_block_at(&samples, 1.0) {
                let closed = rho_tilde(t, gr, 1.0, th);
                dev_elem_g = dev_elem_g.max(closed.max_abs_diff(&block));
                let companion = rho_tilde_loss_on_second(t, gr, 1.0, th);
                dev_companion = dev_companion.max(companion.max_abs_diff(&block));
                let c_oracle = concurrence_wootters(&block).expect("oracle block concurrence");
                dev_c_all = dev_c_all.max((concurrence_closed(t, gr, th) - c_oracle).abs());
            }
            for s in &samples {
                let d1_oracle = oracle::observables(&s.rho).linear_entropy_osc1;
                dev_d1_all =
                    dev_d1_all.max((linear_entropy_osc1(s.t_prime, gr, th) - d1_oracle).abs());
            }
        }
        dev_elem_all = dev_elem_all.max(dev_elem_g);
        checks.push(Check::at_most(
            format!("2. |rho_closed - rho_oracle| elementwise (Gamma={gr})"),
            dev_elem_g,
            1e-4,
        ));
    }
    checks.push(Check::at_most(
        "2. concurrence closed vs oracle",
        dev_c_all,
        1e-3,
    ));
    checks.push(Check::at_most(
        "2. linear entropy closed vs oracle",
        dev_d1_all,
        1e-3,
    ));
    checks.push(
        Check::at_most(
            "2d. |rho_loss_on_second - rho_oracle| elementwise (diagnostic)",
            dev_companion,
            1e-6,
        )
        .with_note("integrator matches the loss-on-second-oscillator family"),
    );
    checks.push(Check::info(
        "2d. closed family vs oracle, overall max deviation",
        dev_elem_all,
        "closed forms correspond to loss on the first oscillator",
    ));
    checks
}

/// Criterion 3: concurrence zeros annihilate the concurrence and interleave.
pub fn criterion3_conc_zeros() -> Vec<Check> {
    let mut checks = Vec::new();
    for &gr in &[0.5, 1.0, 1.5] {
        let table = conc_zeros_ud(gr, 3).unwrap();
        let worst = table
            .entries
            .iter()
            .map(|e| e.value)
            .fold(0.0f64, f64::max);
        checks.push(Check::at_most(
            format!("3. concurrence at tau_1n, tau_2n (Gamma={gr})"),
            worst,
            1e-12,
        ));
        let mut violations = 0usize;
        for w in table.entries.windows(2) {
            if w[0].t_prime >= w[1].t_prime {
                violations += 1;
            }
        }
        let alternates = table
            .entries
            .iter()
            .enumerate()
            .all(|(i, e)| match i % 2 {
                0 => e.kind == CriticalKind::ConcZero1,
                _ => e.kind == CriticalKind::ConcZero2,
            });
        if !alternates {
            violations += 1;
        }
        checks.push(Check::at_most(
            format!("3. zero interleaving violations (Gamma={gr})"),
            violations as f64,
            0.0,
        ));
        // no sudden death: concurrence strictly positive between zeros
        let mut min_mid = f64::INFINITY;
        for w in table.entries.windows(2) {
            let mid = 0.5 * (w[0].t_prime + w[1].t_prime);
            min_mid = min_mid.min(concurrence_closed(mid, gr, FRAC_PI_2));
        }
        checks.push(Check::within(
            format!("3. concurrence at zero midpoints (Gamma={gr})"),
            min_mid,
            1e-6,
            1.0,
        ));
    }
    checks
}

/// Criterion 4: bracketed maxima coincide with the closed forms; envelope
/// constants bounded.
pub fn criterion4_maxima_envelope() -> Vec<Check> {
    let mut checks = Vec::new();
    for &gr in &[0.5, 1.0, 1.5] {
        let closed = conc_maxima_ud(gr, FRAC_PI_2, 2).unwrap();
        let numeric = critical::numeric_conc_maxima_ud(gr, 2).unwrap();
        let mut dev_t: f64 = 0.0;
        let mut dev_v: f64 = 0.0;
        for (n, (tm, tp)) in numeric.iter().enumerate() {
            let cm = closed
                .of_kind(CriticalKind::ConcMaxMinus)
                .find(|e| e.n == n)
                .unwrap();
            let cp = closed
                .of_kind(CriticalKind::ConcMaxPlus)
                .find(|e| e.n == n)
                .unwrap();
            dev_t = dev_t.max((cm.t_prime - tm).abs()).max((cp.t_prime - tp).abs());
            dev_v = dev_v
                .max((concurrence_closed(*tm, gr, FRAC_PI_2) - cm.value).abs())
                .max((concurrence_closed(*tp, gr, FRAC_PI_2) - cp.value).abs());
        }
        checks.push(Check::at_most(
            format!("4. maxima times, bracketed vs closed (Gamma={gr})"),
            dev_t,
            1e-8,
        ));
        checks.push(Check::at_most(
            format!("4. maxima values, closed vs concurrence (Gamma={gr})"),
            dev_v,
            1e-10,
        ));
        let (km, kp) = critical::envelope_constants(gr);
        checks.push(Check::within(
            format!("4. K_minus (Gamma={gr})"),
            km,
            2.0f64.sqrt() - 1.0 - 1e-12,
            1.0 + 1e-12,
        ));
        checks.push(Check::within(
            format!("4. K_plus (Gamma={gr})"),
            kp,
            1.0 - 1e-12,
            2.0f64.sqrt() + 1.0 + 1e-12,
        ));
    }
    checks
}

/// Criterion 5: critically damped point values.
pub fn criterion5_cd_point_values() -> Vec<Check> {
    let c1 = concurrence_closed(1.0, 2.0, FRAC_PI_2);
    let root = entropy_half_crossing(2.0).unwrap();
    let d1 = linear_entropy_osc1(root, 2.0, FRAC_PI_2);
    vec![
        Check::at_most("5. C_CD(t'=1)", c1, 0.0),
        Check::at_most(
            "5. first entropy maximum vs 0.5 (Gamma=2)",
            (d1 - 0.5).abs(),
            1e-9,
        ),
    ]
}

/// Criterion 6: the half crossing of x(t') and its approximations.
pub fn criterion6_half_crossing() -> Vec<Check> {
    let mut checks = Vec::new();
    let r2 = entropy_half_crossing(2.0).unwrap();
    checks.push(Check::at_most(
        "6. |tau_0.5(Gamma=2) - 0.16557|",
        (r2 - 0.16557).abs(),
        1e-4,
    ));
    checks.push(Check::at_most("6. tau_0.5(Gamma=2) below 1/6", r2, 1.0 / 6.0));
    let r200 = entropy_half_crossing(200.0).unwrap();
    checks.push(Check::at_most(
        "6. tau_0.5(Gamma=200) vs ln2/(2 Gamma), rel",
        (r200 * 2.0 * 200.0 / LN_2 - 1.0).abs(),
        0.05,
    ));
    for &gr in &[2.0, 3.0, 5.0, 10.0, 30.0, 100.0] {
        let approx = critical::half_crossing_approximations(gr).unwrap();
        let tau = approx.od_interpolation.unwrap();
        let delta = x_function(tau, gr) / 0.5 - 1.0;
        checks.push(Check::at_most(
            format!("6. interpolation |Delta| (Gamma={gr})"),
            delta.abs(),
            0.025,
        ));
    }
    checks
}

/// Criterion 7: overdamped maxima asymptotics at Gamma = 100.
pub fn criterion7_od_asymptotics() -> Vec<Check> {
    let gr = 100.0;
    let table = conc_maxima_od(gr).unwrap();
    let early = table
        .of_kind(CriticalKind::ConcMaxODEarly)
        .next()
        .unwrap();
    let late = table.of_kind(CriticalKind::ConcMaxODLate).next().unwrap();
    let global = early.value.max(late.value);
    vec![
        Check::within(
            "7. global OD maximum x 2 Gamma (Gamma=100)",
            global * 2.0 * gr,
            0.95,
            1.05,
        )
        .with_note("the global maximum is the earlier time tau_-"),
        Check::at_most(
            "7. tau_+ vs 4 ln(Gamma)/Gamma, rel (Gamma=100)",
            (late.t_prime / (4.0 * gr.ln() / gr) - 1.0).abs(),
            0.15,
        ),
        Check::info(
            "7. C(tau_+) x 2 Gamma, later maximum",
            late.value * 2.0 * gr,
            "the later maximum is exponentially smaller",
        ),
    ]
}

/// Criterion 8: entropy scaling at the fixed evaluation time t' = 1.
pub fn criterion8_entropy_scaling() -> Vec<Check> {
    let gammas: [f64; 4] = [20.0, 50.0, 100.0, 200.0];
    let pts: Vec<(f64, f64)> = gammas
        .iter()
        .map(|&g| (g.ln(), linear_entropy_osc1(1.0, g, FRAC_PI_2).ln()))
        .collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    vec![Check::within(
        "8. slope of log delta1(t'=1) vs log Gamma",
        slope,
        -4.2,
        -3.8,
    )]
}

/// Criterion 9: zero-dissipation relation between entropy and concurrence.
/// The stated constant (1/4) is off by two; the C^2/2 companion verifies the
/// actual identity.
pub fn criterion9_zero_dissipation() -> Vec<Check> {
    let mut worst_quarter: f64 = 0.0;
    let mut worst_half: f64 = 0.0;
    for &th in &[FRAC_PI_4, FRAC_PI_2] {
        for k in 0..=2000 {
            let t = 10.0 * k as f64 / 2000.0;
            let c = concurrence_closed(t, 0.0, th);
            let d1 = linear_entropy_osc1(t, 0.0, th);
            worst_quarter = worst_quarter.max((d1 - c * c / 4.0).abs());
            worst_half = worst_half.max((d1 - c * c / 2.0).abs());
        }
    }
    vec![
        Check::at_most("9. max |delta1 - C^2/4| at Gamma=0", worst_quarter, 1e-10),
        Check::at_most(
            "9d. max |delta1 - C^2/2| at Gamma=0 (diagnostic)",
            worst_half,
            1e-10,
        )
        .with_note("for pure two-qubit states the linear entropy is C^2/2"),
    ]
}

/// Criterion 10: the pi/(4 + 4 Gamma + 2 Gamma^2) approximation to the first
/// half crossing; asserted at Gamma -> 0, reported elsewhere.
pub fn criterion10_tau30_report() -> Vec<Check> {
    let mut checks = Vec::new();
    for &gr in &[0.0, 0.5, 1.0, 1.5] {
        let approx = critical::half_crossing_approximations(gr).unwrap();
        let rel = (approx.poly_small_gamma - approx.bisection).abs() / approx.bisection;
        if gr == 0.0 {
            checks.push(Check::at_most(
                "10. tau_30 approximation rel error (Gamma=0)",
                rel,
                0.005,
            ));
        } else {
            checks.push(Check::info(
                format!("10. tau_30 approximation rel error (Gamma={gr})"),
                rel,
                format!("root {:.8}, approx {:.8}", approx.bisection, approx.poly_small_gamma),
            ));
        }
    }
    checks
}

/// Further consistency checks beyond the numbered criteria: asymptotic
/// half-time relations, the Ramsey-regime evaluation, lab-frame consistency
/// and truncation convergence.
pub fn extra_consistency(profile: Profile) -> Vec<Check> {
    let mut checks = Vec::new();

    let rel = critical::half_time_vs_max_relation(100.0).unwrap();
    checks.push(Check::within(
        "x. tau_0.5 / tau_- (Gamma=100)",
        rel.half_over_max_time,
        0.45,
        0.55,
    ));
    checks.push(Check::within(
        "x. delta1(tau_-)/0.5 (Gamma=100)",
        rel.entropy_at_max_over_peak,
        0.675,
        0.825,
    ));

    // Ramsey-zone regime: Gamma = 100, Omega = 1e6, evaluation at t' = 0.1;
    // the closed-form entropy is tiny and the phases stay exact.
    let d1_ramsey = linear_entropy_osc1(0.1, 100.0, FRAC_PI_2);
    checks.push(Check::at_most(
        "x. delta1(t'=0.1) in the Ramsey regime (Gamma=100)",
        d1_ramsey,
        1e-6,
    ));
    let r = rho_tilde(0.1, 100.0, 1e6, FRAC_PI_2);
    checks.push(Check::at_most(
        "x. rho_tilde hermitian defect at Omega=1e6",
        r.hermitian_defect(),
        1e-14,
    ));

    // Gamma -> 0 limit of the 1/Gamma^4 evaluation point stays finite
    let d1_small = linear_entropy_osc1(1.0, 1e-9, FRAC_PI_2);
    checks.push(Check::within(
        "x. delta1(t'=1) continuity at Gamma -> 0",
        d1_small,
        0.0,
        0.5,
    ));

    if profile == Profile::Full {
        // Lab-frame master equation, displaced back by the closed-form
        // labels, against the loss-on-second family: the full-stack ansatz.
        for &(gr, th, t_end, n1) in &[(0.5f64, FRAC_PI_4, 4.0f64, 10usize), (1.0, FRAC_PI_2, 3.0, 14)] {
            let p = std_params(gr, 1.0, th);
            let gen = Generator::lab(&p, n1, 12);
            let rho0 = oracle::initial_state(&p, n1, 12).unwrap();
            let cfg = IntegratorConfig::to(t_end, 6).unwrap().with_tols(1e-9, 1e-12);
            let samples = oracle::evolve(&rho0, &gen, &cfg).expect("lab oracle run");
            let mut dev: f64 = 0.0;
            let mut worst_block_deficit: f64 = 0.0;
            for s in &samples {
                let (a_rot, b_rot) = labels::labels_rotating(&p, s.t_prime).unwrap();
                let (block, tr) = oracle::displaced_block(&s.rho, a_rot, b_rot, 1.0, s.t_prime);
                worst_block_deficit = worst_block_deficit.max(1.0 - tr);
                let closed = rho_tilde_loss_on_second(s.t_prime, gr, 1.0, th);
                dev = dev.max(closed.max_abs_diff(&block));
            }
            checks.push(Check::at_most(
                format!("x. lab-frame vs loss-on-second family (Gamma={gr})"),
                dev,
                1e-4,
            ));
            checks.push(Check::at_most(
                format!("x. displaced block trace deficit (Gamma={gr})"),
                worst_block_deficit,
                1e-6,
            ));
        }

        // Loss-on-first integration reproduces the primary closed forms.
        let (gr, th) = (1.0, FRAC_PI_4);
        let p = std_params(gr, 1.0, th);
        let gen = Generator::co_moving_loss_on_first(&p, 4, 12);
        let rho0 = oracle::initial_state_displaced(th, 4, 12);
        let cfg = IntegratorConfig::to(6.0, 13).unwrap().with_tols(1e-10, 1e-13);
        let samples = oracle::evolve(&rho0, &gen, &cfg).expect("loss-on-first run");
        let mut dev: f64 = 0.0;
        for (t, block) in oracle_block_at(&samples, 1.0) {
            dev = dev.max(rho_tilde(t, gr, 1.0, th).max_abs_diff(&block));
        }
        checks.push(
            Check::at_most("x. loss-on-first integration vs closed family", dev, 1e-6)
                .with_note("pins the closed forms to the swapped loss channel"),
        );

        // Truncation convergence of the reported concurrence.
        let run = |n2: usize| -> f64 {
            let gen = Generator::co_moving(&p, 4, n2);
            let rho0 = oracle::initial_state_displaced(th, 4, n2);
            let cfg = IntegratorConfig::to(1.0, 2).unwrap().with_tols(1e-10, 1e-13);
            let samples = oracle::evolve(&rho0, &gen, &cfg).unwrap();
            let (block, _) = oracle::displaced_block(
                &samples.last().unwrap().rho,
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                1.0,
                1.0,
            );
            concurrence_wootters(&block).unwrap()
        };
        checks.push(Check::at_most(
            "x. concurrence change under doubled n_max2",
            (run(12) - run(24)).abs(),
            1e-6,
        ));

        // Purity is displacement-invariant: oracle lab-frame entropy equals
        // the displaced-block entropy.
        let p = std_params(1.0, 1.0, FRAC_PI_4);
        let gen = Generator::lab(&p, 14, 12);
        let rho0 = oracle::initial_state(&p, 14, 12).unwrap();
        let cfg = IntegratorConfig::to(2.0, 3).unwrap();
        let samples = oracle::evolve(&rho0, &gen, &cfg).unwrap();
        let mut dev: f64 = 0.0;
        for s in &samples {
            let lab_entropy = oracle::observables(&s.rho).linear_entropy_osc1;
            let (a_rot, b_rot) = labels::labels_rotating(&p, s.t_prime).unwrap();
            let (block, _) = oracle::displaced_block(&s.rho, a_rot, b_rot, 1.0, s.t_prime);
            let red = crate::density::TwoQubitDensity::reduced_osc1(&block);
            let block_entropy = 1.0 - fock::purity(&red);
            dev = dev.max((lab_entropy - block_entropy).abs());
        }
        checks.push(Check::at_most(
            "x. entropy equality, lab frame vs displaced block",
            dev,
            1e-6,
        ));
    }

    checks
}

/// Run the whole battery.
pub fn run_battery(profile: Profile) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(criterion1_ode_consistency());
    checks.extend(criterion2_oracle_equivalence(profile));
    checks.extend(criterion3_conc_zeros());
    checks.extend(criterion4_maxima_envelope());
    checks.extend(criterion5_cd_point_values());
    checks.extend(criterion6_half_crossing());
    checks.extend(criterion7_od_asymptotics());
    checks.extend(criterion8_entropy_scaling());
    checks.extend(criterion9_zero_dissipation());
    checks.extend(criterion10_tau30_report());
    checks.extend(extra_consistency(profile));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_lines_render() {
        let c = Check::at_most("demo", 0.5, 1.0);
        assert!(c.pass);
        assert!(c.line().starts_with("PASS"));
        let c = Check::within("demo2", 2.0, 0.0, 1.0);
        assert!(!c.pass);
        assert!(c.line().starts_with("FAIL"));
    }
}
