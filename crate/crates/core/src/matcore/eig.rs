use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::matrix::ComplexMatrix;

/// Off-diagonal Frobenius mass at which a sweep is declared converged,
/// relative to the Frobenius norm of the input.
const OFF_DIAGONAL_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues (non-increasing) and an orthonormal eigenbasis of a
/// Hermitian matrix: H = U diag(lambda) U*.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// U diag(f(lambda)) U* for a complex-valued spectral map.
    pub fn apply(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.dim();
        let u = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n);
        // out = sum_k f(l_k) u_k u_k*
        for k in 0..n {
            let fk = f(self.eigenvalues[k]);
            if fk.re == 0.0 && fk.im == 0.0 {
                continue;
            }
            for i in 0..n {
                let uik = u.get(i, k) * fk;
                for j in 0..n {
                    let v = out.get(i, j) + uik * u.get(j, k).conj();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|l| Complex64::new(l, 0.0))
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|l| l.abs())
            .fold(0.0, f64::max)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Each pivot (p, q) is phased to a real 2x2 problem and annihilated with a
/// Givens rotation; the accumulated product of rotations is the eigenbasis.
pub fn jacobi_eigen(h: &ComplexMatrix) -> Result<SpectralDecomposition> {
    let n = h.dim();
    let mut a = h.clone();
    let mut u = ComplexMatrix::identity(n);
    let scale = h.frobenius_norm();
    let tol = OFF_DIAGONAL_TOL * scale;

    let mut converged = scale == 0.0 || n < 2;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                // Rotation angle for the phased real block [[app, r], [r, aqq]].
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta >= 0.0 {
                    -1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // J restricted to columns (p, q):
                //   [ c          -s        ]
                //   [ s conj(ph)  c conj(ph)]
                let j11 = Complex64::new(c, 0.0);
                let j12 = Complex64::new(-s, 0.0);
                let j21 = phase.conj() * s;
                let j22 = phase.conj() * c;

                // A <- J* A J, U <- U J.
                for i in 0..n {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    a.set(i, p, aip * j11 + aiq * j21);
                    a.set(i, q, aip * j12 + aiq * j22);
                    let uip = u.get(i, p);
                    let uiq = u.get(i, q);
                    u.set(i, p, uip * j11 + uiq * j21);
                    u.set(i, q, uip * j12 + uiq * j22);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, j11.conj() * apk + j21.conj() * aqk);
                    a.set(q, k, j12.conj() * apk + j22.conj() * aqk);
                }
                a.set(p, q, Complex64::new(0.0, 0.0));
                a.set(q, p, Complex64::new(0.0, 0.0));
            }
        }
    }
    let off = off_diagonal_norm(&a);
    if !converged && off > tol {
        return Err(Error::NonConvergence {
            sweeps: MAX_SWEEPS,
            off,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let eigenvalues_raw: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| eigenvalues_raw[j].total_cmp(&eigenvalues_raw[i]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| eigenvalues_raw[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors.set(row, col, u.get(row, src));
        }
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}
