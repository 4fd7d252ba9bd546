//! Embedded Dormand-Prince 5(4) integrator on complex matrices.
//!
//! Adaptive step control with the standard mixed absolute/relative error
//! norm; FSAL is used, and a caller hook runs after every accepted step
//! (the master-equation driver symmetrizes and checks guards there).

use ndarray::{Array2, Zip};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct StepperConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_step: f64,
}

impl Default for StepperConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-12,
            max_step: f64::INFINITY,
        }
    }
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// b - b_hat, for the embedded 4th-order error estimate
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn combine(y: &Array2<C64>, parts: &[(f64, &Array2<C64>)], h: f64) -> Array2<C64> {
    let mut out = y.clone();
    for (w, k) in parts {
        let wh = C64::new(w * h, 0.0);
        Zip::from(&mut out).and(*k).for_each(|o, kk| *o += wh * kk);
    }
    out
}

/// Integrate dy/dt = rhs(t, y) from t0 to t1.
///
/// `post_accept` runs on the state after every accepted step and may fail
/// (guard violations abort the integration).
pub fn integrate<F, P>(
    rhs: F,
    t0: f64,
    t1: f64,
    y0: Array2<C64>,
    cfg: &StepperConfig,
    mut post_accept: P,
) -> Result<Array2<C64>>
where
    F: Fn(f64, &Array2<C64>, &mut Array2<C64>),
    P: FnMut(f64, &mut Array2<C64>) -> Result<()>,
{
    let span = t1 - t0;
    if span == 0.0 {
        return Ok(y0);
    }
    assert!(span > 0.0, "integrate: t1 must be >= t0");

    let mut t = t0;
    let mut y = y0;
    let dim = y.dim();
    let mut k1 = Array2::zeros(dim);
    let mut k2 = Array2::zeros(dim);
    let mut k3 = Array2::zeros(dim);
    let mut k4 = Array2::zeros(dim);
    let mut k5 = Array2::zeros(dim);
    let mut k6 = Array2::zeros(dim);
    let mut k7 = Array2::zeros(dim);

    rhs(t, &y, &mut k1);
    let mut h = (span * 1e-3).min(cfg.max_step).min(span).max(1e-8);

    while t < t1 {
        h = h.min(t1 - t).min(cfg.max_step);
        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::StepSizeUnderflow { t_prime: t });
        }

        let y2 = combine(&y, &[(A21, &k1)], h);
        rhs(t + h / 5.0, &y2, &mut k2);
        let y3 = combine(&y, &[(A31, &k1), (A32, &k2)], h);
        rhs(t + 3.0 * h / 10.0, &y3, &mut k3);
        let y4 = combine(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], h);
        rhs(t + 4.0 * h / 5.0, &y4, &mut k4);
        let y5 = combine(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], h);
        rhs(t + 8.0 * h / 9.0, &y5, &mut k5);
        let y6 = combine(
            &y,
            &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            h,
        );
        rhs(t + h, &y6, &mut k6);
        let y_new = combine(&y, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)], h);
        rhs(t + h, &y_new, &mut k7);

        // scaled RMS error over all entries
        let mut sum = 0.0f64;
        let n_elem = y.len() as f64;
        {
            let (ys, yn_s) = (y.as_slice().unwrap(), y_new.as_slice().unwrap());
            let (a1, a3) = (k1.as_slice().unwrap(), k3.as_slice().unwrap());
            let (a4, a5) = (k4.as_slice().unwrap(), k5.as_slice().unwrap());
            let (a6, a7) = (k6.as_slice().unwrap(), k7.as_slice().unwrap());
            for i in 0..ys.len() {
                let err = h
                    * (E1 * a1[i] + E3 * a3[i] + E4 * a4[i] + E5 * a5[i] + E6 * a6[i]
                        + E7 * a7[i]);
                let scale = cfg.abs_tol + cfg.rel_tol * ys[i].norm().max(yn_s[i].norm());
                let r = err.norm() / scale;
                sum += r * r;
            }
        }
        let err = (sum / n_elem).sqrt();

        if err <= 1.0 {
            t += h;
            y = y_new;
            post_accept(t, &mut y)?;
            // FSAL would reuse k7, but post_accept may have adjusted y
            rhs(t, &y, &mut k1);
            let factor = if err == 0.0 {
                5.0
            } else {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            };
            h *= factor;
        } else {
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 0.9);
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay() {
        let y0 = Array2::from_elem((2, 2), C64::new(1.0, 0.5));
        let cfg = StepperConfig::default();
        let y = integrate(
            |_t, y, out| out.assign(&y.mapv(|v| -v)),
            0.0,
            3.0,
            y0.clone(),
            &cfg,
            |_, _| Ok(()),
        )
        .unwrap();
        let expect = (-3.0f64).exp();
        for v in y.iter() {
            assert!((v - C64::new(1.0, 0.5) * expect).norm() < 1e-9);
        }
    }

    #[test]
    fn rotation_has_unit_modulus() {
        let mut y0 = Array2::zeros((1, 1));
        y0[[0, 0]] = C64::new(1.0, 0.0);
        let cfg = StepperConfig {
            rel_tol: 1e-11,
            abs_tol: 1e-13,
            max_step: f64::INFINITY,
        };
        let y = integrate(
            |_t, y, out| out.assign(&y.mapv(|v| C64::new(0.0, 1.0) * v)),
            0.0,
            7.0,
            y0,
            &cfg,
            |_, _| Ok(()),
        )
        .unwrap();
        let v = y[[0, 0]];
        assert!((v.norm() - 1.0).abs() < 1e-9);
        assert!((v - C64::from_polar(1.0, 7.0)).norm() < 1e-8);
    }

    #[test]
    fn post_accept_failure_aborts() {
        let y0 = Array2::from_elem((1, 1), C64::new(1.0, 0.0));
        let res = integrate(
            |_t, y, out| out.assign(y),
            0.0,
            1.0,
            y0,
            &StepperConfig::default(),
            |t, _| {
                if t > 0.5 {
                    Err(Error::TraceDrift {
                        t_prime: t,
                        drift: 1.0,
                        limit: 1e-8,
                    })
                } else {
                    Ok(())
                }
            },
        );
        assert!(matches!(res, Err(Error::TraceDrift { .. })));
    }
}
