//! Truncated two-mode Fock-space states and displacement operators.
//!
//! Basis order is row-major |n1 n2> with n1 the first oscillator. The
//! displacement matrices are built by spectral decomposition of the
//! anti-Hermitian generator, so they are exactly unitary on the truncated
//! space.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::density::TwoQubitDensity;
use crate::error::{Error, Result};
use crate::linalg;

/// Highest-Fock-level population allowed before a truncation is declared
/// inadequate.
pub const LEAKAGE_LIMIT: f64 = 1e-8;

/// Annihilation operator on a Fock space truncated at `n_max`.
pub fn annihilation(n_max: usize) -> Array2<C64> {
    let d = n_max + 1;
    let mut a: Array2<C64> = Array2::zeros((d, d));
    for n in 1..d {
        a[[n - 1, n]] = C64::new((n as f64).sqrt(), 0.0);
    }
    a
}

/// Single-mode displacement D(alpha) = exp(alpha a^dag - alpha* a),
/// exactly unitary on the truncated space.
pub fn displacement_matrix(n_max: usize, alpha: C64) -> Array2<C64> {
    let d = n_max + 1;
    let a = annihilation(n_max);
    // generator M = alpha a^dag - alpha* a; H = i M is Hermitian, D = exp(-i H)
    let mut h: Array2<C64> = Array2::zeros((d, d));
    let i = C64::new(0.0, 1.0);
    for r in 0..d {
        for c in 0..d {
            h[[r, c]] = i * (alpha * a[[c, r]].conj() - alpha.conj() * a[[r, c]]);
        }
    }
    let (vals, vecs) = linalg::eigh(&h);
    let mut out: Array2<C64> = Array2::zeros((d, d));
    for k in 0..d {
        let ph = C64::from_polar(1.0, -vals[k]);
        for r in 0..d {
            for c in 0..d {
                out[[r, c]] += vecs[[r, k]] * vecs[[c, k]].conj() * ph;
            }
        }
    }
    out
}

/// Coherent state |alpha> as a truncated vector (displaced vacuum).
pub fn coherent_state(n_max: usize, alpha: C64) -> Array1<C64> {
    displacement_matrix(n_max, alpha).column(0).to_owned()
}

/// Density matrix on the truncated two-mode Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockDensity {
    pub n_max1: usize,
    pub n_max2: usize,
    m: Array2<C64>,
}

impl FockDensity {
    pub fn new(n_max1: usize, n_max2: usize, m: Array2<C64>) -> Self {
        let d = (n_max1 + 1) * (n_max2 + 1);
        assert_eq!(m.dim(), (d, d), "FockDensity: dimension mismatch");
        Self { n_max1, n_max2, m }
    }

    /// Pure product state |psi1> (x) |psi2>.
    pub fn from_product(n_max1: usize, n_max2: usize, psi1: &Array1<C64>, psi2: &Array1<C64>) -> Self {
        assert_eq!(psi1.len(), n_max1 + 1);
        assert_eq!(psi2.len(), n_max2 + 1);
        let d = (n_max1 + 1) * (n_max2 + 1);
        let mut psi: Array1<C64> = Array1::zeros(d);
        for i in 0..=n_max1 {
            for j in 0..=n_max2 {
                psi[i * (n_max2 + 1) + j] = psi1[i] * psi2[j];
            }
        }
        let mut m: Array2<C64> = Array2::zeros((d, d));
        for r in 0..d {
            for c in 0..d {
                m[[r, c]] = psi[r] * psi[c].conj();
            }
        }
        Self { n_max1, n_max2, m }
    }

    /// Embed a two-qubit matrix into the {0,1} x {0,1} corner.
    pub fn embed_two_qubit(rho: &TwoQubitDensity, n_max1: usize, n_max2: usize) -> Result<Self> {
        if n_max1 < 1 || n_max2 < 1 {
            return Err(Error::InvalidParameter {
                name: "n_max",
                value: n_max1.min(n_max2) as f64,
                constraint: "truncation must be >= 1",
            });
        }
        let d = (n_max1 + 1) * (n_max2 + 1);
        let mut m: Array2<C64> = Array2::zeros((d, d));
        let idx = |q: usize| -> usize {
            let (n1, n2) = (q / 2, q % 2);
            n1 * (n_max2 + 1) + n2
        };
        for r in 0..4 {
            for c in 0..4 {
                m[[idx(r), idx(c)]] = rho.element(r, c);
            }
        }
        Ok(Self { n_max1, n_max2, m })
    }

    pub fn dim(&self) -> usize {
        (self.n_max1 + 1) * (self.n_max2 + 1)
    }

    #[inline]
    pub fn index(&self, n1: usize, n2: usize) -> usize {
        n1 * (self.n_max2 + 1) + n2
    }

    pub fn as_array(&self) -> &Array2<C64> {
        &self.m
    }

    pub fn as_array_mut(&mut self) -> &mut Array2<C64> {
        &mut self.m
    }

    pub fn trace(&self) -> f64 {
        linalg::trace(&self.m).re
    }

    pub fn hermitian_defect(&self) -> f64 {
        linalg::hermitian_defect(&self.m)
    }

    pub fn hermitize(&mut self) {
        linalg::hermitize(&mut self.m);
    }

    pub fn min_eigenvalue(&self) -> f64 {
        linalg::min_eigenvalue(&self.m)
    }

    /// Population of the highest retained Fock level of each mode.
    pub fn top_level_populations(&self) -> (f64, f64) {
        let (d1, d2) = (self.n_max1 + 1, self.n_max2 + 1);
        let top1: f64 = (0..d2)
            .map(|k| self.m[[self.index(self.n_max1, k), self.index(self.n_max1, k)]].re)
            .sum();
        let top2: f64 = (0..d1)
            .map(|k| self.m[[self.index(k, self.n_max2), self.index(k, self.n_max2)]].re)
            .sum();
        (top1, top2)
    }

    /// Error out if either mode's top level holds more than `limit`.
    pub fn check_leakage(&self, limit: f64) -> Result<()> {
        let (t1, t2) = self.top_level_populations();
        if t1 > limit {
            return Err(Error::TruncationLeakage {
                mode: 1,
                population: t1,
                limit,
            });
        }
        if t2 > limit {
            return Err(Error::TruncationLeakage {
                mode: 2,
                population: t2,
                limit,
            });
        }
        Ok(())
    }

    /// D(beta, alpha) rho D^dagger(beta, alpha) with D = D1(beta) (x) D2(alpha).
    /// Checks the leakage guard on the result.
    pub fn displaced(&self, beta: C64, alpha: C64) -> Result<Self> {
        let d1 = displacement_matrix(self.n_max1, beta);
        let d2 = displacement_matrix(self.n_max2, alpha);
        let dd = linalg::kron(&d1, &d2);
        let m = dd.dot(&self.m).dot(&dd.mapv(|z| z.conj()).t().to_owned());
        let out = Self {
            n_max1: self.n_max1,
            n_max2: self.n_max2,
            m,
        };
        out.check_leakage(LEAKAGE_LIMIT)?;
        Ok(out)
    }

    /// D^dagger(beta, alpha) rho D(beta, alpha) (inverse of [`Self::displaced`];
    /// no leakage check, the displaced frame concentrates weight near vacuum).
    pub fn displaced_back(&self, beta: C64, alpha: C64) -> Self {
        let d1 = displacement_matrix(self.n_max1, -beta);
        let d2 = displacement_matrix(self.n_max2, -alpha);
        let dd = linalg::kron(&d1, &d2);
        let m = dd.dot(&self.m).dot(&dd.mapv(|z| z.conj()).t().to_owned());
        Self {
            n_max1: self.n_max1,
            n_max2: self.n_max2,
            m,
        }
    }

    /// Reduced state of oscillator 1 (trace over mode 2).
    pub fn reduced_osc1(&self) -> Array2<C64> {
        let (d1, d2) = (self.n_max1 + 1, self.n_max2 + 1);
        let mut r: Array2<C64> = Array2::zeros((d1, d1));
        for a in 0..d1 {
            for b in 0..d1 {
                for k in 0..d2 {
                    r[[a, b]] += self.m[[self.index(a, k), self.index(b, k)]];
                }
            }
        }
        r
    }

    /// Reduced state of oscillator 2 (trace over mode 1).
    pub fn reduced_osc2(&self) -> Array2<C64> {
        let (d1, d2) = (self.n_max1 + 1, self.n_max2 + 1);
        let mut r: Array2<C64> = Array2::zeros((d2, d2));
        for a in 0..d2 {
            for b in 0..d2 {
                for k in 0..d1 {
                    r[[a, b]] += self.m[[self.index(k, a), self.index(k, b)]];
                }
            }
        }
        r
    }

    /// The {0,1} x {0,1} block as a two-qubit matrix (no frame phases).
    pub fn two_qubit_block(&self) -> TwoQubitDensity {
        let mut m: Array2<C64> = Array2::zeros((4, 4));
        let idx = |q: usize| -> usize { (q / 2) * (self.n_max2 + 1) + (q % 2) };
        for r in 0..4 {
            for c in 0..4 {
                m[[r, c]] = self.m[[idx(r), idx(c)]];
            }
        }
        TwoQubitDensity::from_array(m)
    }

    /// Trace distance (1/2) ||a - b||_1 between two states on the same space.
    pub fn trace_distance(&self, other: &Self) -> f64 {
        let diff = self.as_array() - other.as_array();
        let (vals, _) = linalg::eigh(&diff);
        0.5 * vals.iter().map(|v| v.abs()).sum::<f64>()
    }
}

/// tr(rho^2) for a (nearly) Hermitian matrix.
pub fn purity(m: &Array2<C64>) -> f64 {
    let n = m.nrows();
    let mut p = C64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            p += m[[i, j]] * m[[j, i]];
        }
    }
    p.re
}

/// Mean occupation sum_n n rho_nn of a single-mode matrix.
pub fn mean_photons(m: &Array2<C64>) -> f64 {
    (0..m.nrows()).map(|n| n as f64 * m[[n, n]].re).sum()
}
