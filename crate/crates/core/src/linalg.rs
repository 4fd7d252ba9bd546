//! Small dense complex linear algebra: Hermitian eigensolver (cyclic Jacobi),
//! Kronecker products and a few matrix helpers.
//!
//! Matrices here are at most a few hundred rows (truncated two-mode Fock
//! spaces), so a dependency-free Jacobi sweep is both fast enough and
//! bit-deterministic across platforms.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

/// Largest |a_ij - conj(a_ji)| over all pairs.
pub fn hermitian_defect(a: &Array2<C64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (a[[i, j]] - a[[j, i]].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

pub fn trace(a: &Array2<C64>) -> C64 {
    (0..a.nrows()).map(|i| a[[i, i]]).sum()
}

/// Replace `a` by its Hermitian part (a + a^dagger)/2.
pub fn hermitize(a: &mut Array2<C64>) {
    let n = a.nrows();
    for i in 0..n {
        a[[i, i]] = C64::new(a[[i, i]].re, 0.0);
        for j in (i + 1)..n {
            let m = 0.5 * (a[[i, j]] + a[[j, i]].conj());
            a[[i, j]] = m;
            a[[j, i]] = m.conj();
        }
    }
}

/// Kronecker product a (x) b.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = Array2::zeros((ra * rb, ca * cb));
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[[i, j]];
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[[i * rb + k, j * cb + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching eigenvector
/// columns. The input is symmetrized first; callers should check
/// [`hermitian_defect`] themselves if that matters.
pub fn eigh(a: &Array2<C64>) -> (Array1<f64>, Array2<C64>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "eigh: matrix must be square");
    let mut m = a.clone();
    hermitize(&mut m);
    let mut v: Array2<C64> = Array2::eye(n);

    let scale: f64 = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| m[[i, j]].norm())
        .fold(0.0, f64::max)
        .max(1e-300);
    let tol = 1e-15 * scale;

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(m[[p, q]].norm());
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                if apq.norm() <= tol * 1e-2 {
                    continue;
                }
                let app = m[[p, p]].re;
                let aqq = m[[q, q]].re;
                // Unitary 2x2 rotation diagonalizing [[app, apq], [apq*, aqq]].
                let phase = apq / apq.norm();
                let tau = (aqq - app) / (2.0 * apq.norm());
                // small-magnitude root of t^2 - 2 tau t - 1 = 0
                let t = -tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Columns: p' = c p + s e^{i phi} q ; q' = -s e^{-i phi} p + c q
                let sp = phase * s;
                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = mkp * c + mkq * sp.conj();
                    m[[k, q]] = -mkp * sp + mkq * c;
                }
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = mpk * c + mqk * sp;
                    m[[q, k]] = -mpk * sp.conj() + mqk * c;
                }
                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = vkp * c + vkq * sp.conj();
                    v[[k, q]] = -vkp * sp + vkq * c;
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    let vals: Vec<f64> = (0..n).map(|i| m[[i, i]].re).collect();
    idx.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap());
    let evals = Array1::from_iter(idx.iter().map(|&i| vals[i]));
    let mut evecs = Array2::zeros((n, n));
    for (col, &i) in idx.iter().enumerate() {
        for k in 0..n {
            evecs[[k, col]] = v[[k, i]];
        }
    }
    (evals, evecs)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &Array2<C64>) -> f64 {
    eigh(a).0[0]
}

/// Principal square root of a Hermitian positive-semidefinite matrix.
/// Eigenvalues below zero (numerical noise) are clipped.
pub fn sqrtm_psd(a: &Array2<C64>) -> Array2<C64> {
    let (vals, vecs) = eigh(a);
    let n = a.nrows();
    let mut out: Array2<C64> = Array2::zeros((n, n));
    for k in 0..n {
        let r = vals[k].max(0.0).sqrt();
        if r == 0.0 {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                out[[i, j]] += vecs[[i, k]] * vecs[[j, k]].conj() * r;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn eigh_pauli_y() {
        let m = ndarray::array![[c(0., 0.), c(0., -1.)], [c(0., 1.), c(0., 0.)]];
        let (vals, vecs) = eigh(&m);
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        // eigenvector check: m v = lambda v
        for k in 0..2 {
            for i in 0..2 {
                let mv: C64 = (0..2).map(|j| m[[i, j]] * vecs[[j, k]]).sum();
                assert!((mv - vecs[[i, k]] * vals[k]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn eigh_random_hermitian_reconstructs() {
        // deterministic pseudo-random fill
        let n = 12;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut m = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                m[[i, j]] = c(next(), next());
            }
        }
        hermitize(&mut m);
        let (vals, vecs) = eigh(&m);
        // reconstruct
        let mut rec: Array2<C64> = Array2::zeros((n, n));
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    rec[[i, j]] += vecs[[i, k]] * vecs[[j, k]].conj() * vals[k];
                }
            }
        }
        let err = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (rec[[i, j]] - m[[i, j]]).norm())
            .fold(0.0f64, f64::max);
        assert!(err < 1e-12, "reconstruction error {err}");
    }

    #[test]
    fn sqrtm_squares_back() {
        let m = ndarray::array![
            [c(2.0, 0.0), c(0.3, 0.1)],
            [c(0.3, -0.1), c(1.0, 0.0)]
        ];
        let r = sqrtm_psd(&m);
        let sq = r.dot(&r);
        for i in 0..2 {
            for j in 0..2 {
                assert!((sq[[i, j]] - m[[i, j]]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn kron_dims_and_values() {
        let a = ndarray::array![[c(1., 0.), c(2., 0.)], [c(0., 0.), c(1., 0.)]];
        let b = Array2::eye(3);
        let k = kron(&a, &b);
        assert_eq!(k.dim(), (6, 6));
        assert_eq!(k[[0, 3]], c(2., 0.));
        assert_eq!(k[[5, 5]], c(1., 0.));
    }
}
