//! Entanglement and mixedness measures: concurrence and linear entropy.
//!
//! Closed forms, in terms of the envelope-folded sector profiles p, q of
//! [`crate::density`]:
//!
//! ```text
//! C(t')      = 2 sin^2(theta) |q(t') p(t')|
//! x(t')      = p(t')^2
//! delta1(t') = 2 sin^4(theta) x (1 - x)
//! ```
//!
//! C equals 2 |<01| rho_tilde |10>| identically, and delta1 equals
//! 2 det(tr_2 rho_tilde); both identities are exercised in tests. The
//! generic Wootters concurrence is provided for cross-checking arbitrary
//! two-qubit states.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::density::{sector_profile, LossSide, TwoQubitDensity};
use crate::error::Result;
use crate::linalg;

/// One point of a metrics time series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSample {
    pub t_prime: f64,
    /// In [0, 1].
    pub concurrence: f64,
    /// In [0, 0.5] (two-level maximum).
    pub linear_entropy: f64,
}

/// Closed-form concurrence of the displaced two-qubit state.
pub fn concurrence_closed(t_prime: f64, gamma_ratio: f64, theta: f64) -> f64 {
    let (p, q) = sector_profile(gamma_ratio, t_prime, LossSide::First);
    let s2 = theta.sin() * theta.sin();
    2.0 * s2 * (q * p).abs()
}

/// The population profile x(t') of the first oscillator's excited state
/// (normalized so x(0) = 1); drives the linear entropy.
pub fn x_function(t_prime: f64, gamma_ratio: f64) -> f64 {
    let (p, _) = sector_profile(gamma_ratio, t_prime, LossSide::First);
    p * p
}

/// Closed-form linear entropy of the first oscillator.
pub fn linear_entropy_osc1(t_prime: f64, gamma_ratio: f64, theta: f64) -> f64 {
    let x = x_function(t_prime, gamma_ratio);
    let s2 = theta.sin() * theta.sin();
    2.0 * s2 * s2 * x * (1.0 - x)
}

/// Closed-form metrics at one time.
pub fn metric_sample(t_prime: f64, gamma_ratio: f64, theta: f64) -> MetricSample {
    MetricSample {
        t_prime,
        concurrence: concurrence_closed(t_prime, gamma_ratio, theta),
        linear_entropy: linear_entropy_osc1(t_prime, gamma_ratio, theta),
    }
}

/// Generic Wootters concurrence of an arbitrary two-qubit density matrix:
/// max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
/// eigenvalues of rho (sy (x) sy) rho* (sy (x) sy).
///
/// Rejects inputs violating the density-matrix contract (Hermitian to 1e-8,
/// trace 1 to 1e-6, eigenvalues above -1e-10).
pub fn concurrence_wootters(rho: &TwoQubitDensity) -> Result<f64> {
    rho.validate(1e-8, 1e-6, 1e-8)?;
    let m = rho.as_array();

    // F = (sy (x) sy) conj(rho) (sy (x) sy); (sy (x) sy)_{ij} nonzero on the
    // anti-diagonal with signs (-1, +1, +1, -1).
    let sign = [-1.0, 1.0, 1.0, -1.0];
    let mut f: Array2<C64> = Array2::zeros((4, 4));
    for i in 0..4 {
        for j in 0..4 {
            f[[i, j]] = m[[3 - i, 3 - j]].conj() * (sign[i] * sign[j]);
        }
    }
    // eigenvalues of rho F equal those of the Hermitian sqrt(rho) F sqrt(rho)
    let sq = linalg::sqrtm_psd(m);
    let h = sq.dot(&f).dot(&sq);
    let (vals, _) = linalg::eigh(&h);
    let mut lam: Vec<f64> = vals.iter().map(|v| v.max(0.0).sqrt()).collect();
    lam.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((lam[0] - lam[1] - lam[2] - lam[3]).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::rho_tilde;
    use ndarray::array;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn concurrence_starts_at_zero() {
        for &gr in &[0.0, 1.0, 2.0, 5.0] {
            assert_eq!(concurrence_closed(0.0, gr, FRAC_PI_2), 0.0);
            assert_eq!(linear_entropy_osc1(0.0, gr, FRAC_PI_2), 0.0);
        }
    }

    #[test]
    fn critically_damped_zero_at_unit_time() {
        assert_eq!(concurrence_closed(1.0, 2.0, FRAC_PI_2), 0.0);
    }

    #[test]
    fn undamped_peak_reaches_one() {
        // Gamma = 0, theta = pi/2: C = |sin 2t|, maximal at pi/4
        let c_max = (0..2000)
            .map(|k| concurrence_closed(10.0 * k as f64 / 1999.0, 0.0, FRAC_PI_2))
            .fold(0.0f64, f64::max);
        assert!((c_max - 1.0).abs() < 1e-6);
        assert!((concurrence_closed(FRAC_PI_4, 0.0, FRAC_PI_2) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn closed_equals_block_coherence() {
        for &(t, gr, th) in &[(1.0, 1.0, FRAC_PI_4), (0.4, 0.3, 0.8), (2.5, 4.0, FRAC_PI_2)] {
            let r = rho_tilde(t, gr, 1.0, th);
            let c2 = 2.0 * r.element(1, 2).norm();
            assert!((concurrence_closed(t, gr, th) - c2).abs() < 1e-12);
        }
    }

    #[test]
    fn x_function_reference_points() {
        for &gr in &[0.0, 1.0, 2.0, 7.0] {
            assert_eq!(x_function(0.0, gr), 1.0);
        }
        // Gamma = 0: x = cos^2 t
        for &t in &[0.3, 1.2, 2.9] {
            assert!((x_function(t, 0.0) - t.cos() * t.cos()).abs() < 1e-14);
        }
        // half crossing near the critically damped value
        assert!((x_function(0.16557, 2.0) - 0.5).abs() < 1e-4);
    }

    #[test]
    fn entropy_equals_det_identity() {
        for &(t, gr, th) in &[(0.7, 0.5, FRAC_PI_4), (1.9, 2.0, 1.1), (0.2, 3.5, FRAC_PI_2)] {
            let r = rho_tilde(t, gr, 1.0, th);
            let red = r.reduced_osc1();
            let det = (red[[0, 0]] * red[[1, 1]] - red[[0, 1]] * red[[1, 0]]).re;
            assert!((linear_entropy_osc1(t, gr, th) - 2.0 * det).abs() < 1e-12);
        }
    }

    #[test]
    fn theta_scaling() {
        let (t, gr) = (0.9, 0.8);
        for &th in &[PI / 8.0, FRAC_PI_4, 1.2] {
            let s2 = th.sin() * th.sin();
            let base_c = concurrence_closed(t, gr, FRAC_PI_2);
            let base_d = linear_entropy_osc1(t, gr, FRAC_PI_2);
            assert!((concurrence_closed(t, gr, th) - s2 * base_c).abs() < 1e-13);
            assert!((linear_entropy_osc1(t, gr, th) - s2 * s2 * base_d).abs() < 1e-13);
        }
    }

    #[test]
    fn wootters_on_bell_and_product_states() {
        let half = c(0.5, 0.0);
        let bell = TwoQubitDensity::from_array(array![
            [half, c(0., 0.), c(0., 0.), half],
            [c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.)],
            [c(0., 0.), c(0., 0.), c(0., 0.), c(0., 0.)],
            [half, c(0., 0.), c(0., 0.), half]
        ]);
        assert!((concurrence_wootters(&bell).unwrap() - 1.0).abs() < 1e-12);

        let mut prod: Array2<C64> = Array2::zeros((4, 4));
        prod[[0, 0]] = c(1.0, 0.0);
        let prod = TwoQubitDensity::from_array(prod);
        assert!(concurrence_wootters(&prod).unwrap().abs() < 1e-12);
    }

    #[test]
    fn wootters_rejects_unphysical_input() {
        let mut m: Array2<C64> = Array2::zeros((4, 4));
        m[[0, 0]] = c(1.5, 0.0);
        m[[1, 1]] = c(-0.5, 0.0);
        assert!(concurrence_wootters(&TwoQubitDensity::from_array(m)).is_err());
    }

    #[test]
    fn wootters_matches_closed_form_on_family_grid() {
        for &gr in &[0.0, 0.5, 1.9, 2.0, 2.1, 5.0, 100.0] {
            for &th in &[PI / 8.0, FRAC_PI_4, FRAC_PI_2] {
                for k in 0..21 {
                    let t = 20.0 * k as f64 / 20.0;
                    let r = rho_tilde(t, gr, 1.0, th);
                    let w = concurrence_wootters(&r).unwrap();
                    let cc = concurrence_closed(t, gr, th);
                    assert!(
                        (w - cc).abs() <= 1e-10,
                        "gr={gr} th={th} t={t}: wootters={w} closed={cc}"
                    );
                }
            }
        }
    }

    #[test]
    fn ranges_stay_physical() {
        for k in 0..400 {
            let t = 20.0 * k as f64 / 399.0;
            for &gr in &[0.0, 0.9, 2.0, 3.7] {
                let s = metric_sample(t, gr, FRAC_PI_2);
                assert!(s.concurrence >= 0.0 && s.concurrence <= 1.0 + 1e-12);
                assert!(s.linear_entropy >= -1e-15 && s.linear_entropy <= 0.5 + 1e-12);
            }
        }
    }
}
