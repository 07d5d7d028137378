use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::eig::{jacobi_eigen, SpectralDecomposition};
use crate::matcore::matrix::ComplexMatrix;

const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues in [-PSD_CLAMP * spectral_radius, 0) are treated as roundoff
/// and clamped to zero; anything more negative fails the psd check.
const PSD_CLAMP: f64 = 1e-10;

/// Validated Hermitian matrix with optional positivity certificates.
#[derive(Debug, Clone)]
pub struct HermitianMatrix {
    mat: ComplexMatrix,
    psd: bool,
    pd: bool,
}

impl HermitianMatrix {
    /// Hermitian-only validation; positivity flags are left unset.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let tolerance = HERMITIAN_TOL * (1.0 + mat.max_abs());
        let deviation = mat.hermitian_deviation();
        if deviation > tolerance {
            return Err(Error::NotHermitian {
                deviation,
                tolerance,
            });
        }
        Ok(HermitianMatrix {
            mat: symmetrize(&mat),
            psd: false,
            pd: false,
        })
    }

    /// Validates Hermitian structure and positive semidefiniteness.
    /// Eigenvalues within roundoff of zero are accepted (and later clamped).
    pub fn psd(mat: ComplexMatrix) -> Result<Self> {
        let mut h = Self::new(mat)?;
        let d = jacobi_eigen(h.matrix())?;
        let floor = -PSD_CLAMP * d.spectral_radius();
        let min = d.min_eigenvalue();
        if min < floor {
            return Err(Error::NotPsd {
                eigenvalue: min,
                floor,
            });
        }
        h.psd = true;
        h.pd = min > 0.0;
        Ok(h)
    }

    /// Like `psd`, but additionally requires strict positive definiteness.
    pub fn pd(mat: ComplexMatrix) -> Result<Self> {
        let h = Self::psd(mat)?;
        if !h.pd {
            return Err(Error::NotPd { eigenvalue: 0.0 });
        }
        Ok(h)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn is_psd(&self) -> bool {
        self.psd
    }

    pub fn is_pd(&self) -> bool {
        self.pd
    }
}

/// Averages away the roundoff-scale skew part so downstream iterations see
/// an exactly Hermitian matrix.
fn symmetrize(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.dim();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        out.set(i, i, Complex64::new(m.get(i, i).re, 0.0));
        for j in (i + 1)..n {
            let v = (m.get(i, j) + m.get(j, i).conj()).scale(0.5);
            out.set(i, j, v);
            out.set(j, i, v.conj());
        }
    }
    out
}

/// Spectral decomposition of a validated Hermitian matrix. For psd-flagged
/// input, roundoff-scale negative eigenvalues are clamped to zero.
pub fn spectral_decompose(h: &HermitianMatrix) -> Result<SpectralDecomposition> {
    let mut d = jacobi_eigen(h.matrix())?;
    if h.is_psd() {
        let floor = -PSD_CLAMP * d.spectral_radius();
        for l in d.eigenvalues.iter_mut() {
            if *l < floor {
                return Err(Error::NotPsd {
                    eigenvalue: *l,
                    floor,
                });
            }
            if *l < 0.0 {
                *l = 0.0;
            }
        }
    }
    Ok(d)
}

/// Complex power of a psd matrix through its (clamped) decomposition.
///
/// lambda^z = exp(z ln lambda) on the positive spectrum; 0^z = 0 for
/// Re(z) > 0; z = 0 yields the support projection. Negative or purely
/// imaginary powers of a singular matrix are rejected.
pub fn power_of_decomposition(d: &SpectralDecomposition, z: Complex64) -> Result<ComplexMatrix> {
    let singular = d.eigenvalues.iter().any(|&l| l == 0.0);
    let is_zero = z.re == 0.0 && z.im == 0.0;
    if singular && !is_zero && z.re <= 0.0 {
        return Err(Error::SingularNegativePower { re: z.re, im: z.im });
    }
    Ok(d.apply(|l| {
        if l > 0.0 {
            (z * l.ln()).exp()
        } else if is_zero {
            // support projection convention: 0^0 := 0 on the kernel
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// A^z for psd A via functional calculus. One decomposition per call; callers
/// that sweep over many exponents should decompose once and use
/// `power_of_decomposition`.
pub fn matrix_power(a: &HermitianMatrix, z: Complex64) -> Result<ComplexMatrix> {
    let d = spectral_decompose(a)?;
    power_of_decomposition(&d, z)
}

/// Singular values in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularValueVector {
    pub values: Vec<f64>,
}

impl SingularValueVector {
    pub fn get(&self, j: usize) -> f64 {
        self.values[j]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn gram_decomposition(x: &ComplexMatrix) -> Result<SpectralDecomposition> {
    let gram = x.adjoint().mul(x);
    let mut d = jacobi_eigen(&gram)?;
    // X*X is psd by construction; sweep away roundoff negatives
    let floor = -PSD_CLAMP * d.spectral_radius();
    for l in d.eigenvalues.iter_mut() {
        if *l < floor {
            return Err(Error::NotPsd {
                eigenvalue: *l,
                floor,
            });
        }
        if *l < 0.0 {
            *l = 0.0;
        }
    }
    Ok(d)
}

/// Modulus |X| = (X*X)^{1/2}.
pub fn modulus(x: &ComplexMatrix) -> Result<HermitianMatrix> {
    let d = gram_decomposition(x)?;
    let m = d.apply(|l| Complex64::new(l.sqrt(), 0.0));
    let mut h = HermitianMatrix::new(m)?;
    h.psd = true;
    h.pd = d.min_eigenvalue() > 0.0;
    Ok(h)
}

/// Singular values of X, i.e. the eigenvalues of |X|, non-increasing.
pub fn singular_values(x: &ComplexMatrix) -> Result<SingularValueVector> {
    let d = gram_decomposition(x)?;
    let values = d.eigenvalues.iter().map(|l| l.sqrt()).collect();
    Ok(SingularValueVector { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            HermitianMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn psd_rejects_negative_spectrum() {
        let m = ComplexMatrix::diagonal(&[1.0, -0.5]);
        assert!(matches!(HermitianMatrix::psd(m), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn power_identity_is_identity() {
        let a = HermitianMatrix::psd(ComplexMatrix::identity(3)).unwrap();
        let p = matrix_power(&a, Complex64::new(0.5, 3.0)).unwrap();
        assert!(p.sub(&ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn power_sqrt_diagonal() {
        let a = HermitianMatrix::psd(ComplexMatrix::diagonal(&[4.0, 9.0])).unwrap();
        let p = matrix_power(&a, Complex64::new(0.5, 0.0)).unwrap();
        let expect = ComplexMatrix::diagonal(&[2.0, 3.0]);
        assert!(p.sub(&expect).frobenius_norm() < 1e-12);
    }

    #[test]
    fn sqrt_matches_scalar_powers_example1_a() {
        let a = HermitianMatrix::psd(ComplexMatrix::diagonal(&[1141.0, 204.0, 0.125])).unwrap();
        let p = matrix_power(&a, Complex64::new(0.5, 0.0)).unwrap();
        let expect = ComplexMatrix::diagonal(&[1141f64.sqrt(), 204f64.sqrt(), 0.125f64.sqrt()]);
        assert!(p.sub(&expect).frobenius_norm() < 1e-10 * expect.frobenius_norm());
    }

    #[test]
    fn imaginary_power_of_pd_is_unitary() {
        let m = ComplexMatrix::from_real_rows(&[
            vec![39.0, 90.0, 43.0],
            vec![90.0, 418.0, 370.0],
            vec![43.0, 370.0, 426.0],
        ])
        .unwrap();
        let a = HermitianMatrix::psd(m).unwrap();
        let p = matrix_power(&a, Complex64::new(0.0, 1.7)).unwrap();
        let gram = p.adjoint().mul(&p);
        assert!(gram.sub(&ComplexMatrix::identity(3)).frobenius_norm() < 1e-9);
    }

    #[test]
    fn singular_negative_power_rejected() {
        let a = HermitianMatrix::psd(ComplexMatrix::diagonal(&[1.0, 0.0])).unwrap();
        assert!(matches!(
            matrix_power(&a, Complex64::new(-0.5, 0.0)),
            Err(Error::SingularNegativePower { .. })
        ));
        assert!(matches!(
            matrix_power(&a, Complex64::new(0.0, 2.0)),
            Err(Error::SingularNegativePower { .. })
        ));
        // z = 0 gives the support projection
        let proj = matrix_power(&a, Complex64::new(0.0, 0.0)).unwrap();
        let expect = ComplexMatrix::diagonal(&[1.0, 0.0]);
        assert!(proj.sub(&expect).frobenius_norm() < 1e-12);
    }

    #[test]
    fn modulus_of_sign_diagonal() {
        let x = ComplexMatrix::diagonal(&[-3.0, 2.0]);
        let m = modulus(&x).unwrap();
        let expect = ComplexMatrix::diagonal(&[3.0, 2.0]);
        assert!(m.matrix().sub(&expect).frobenius_norm() < 1e-12);
        assert!(m.is_psd());
    }

    #[test]
    fn modulus_of_psd_is_itself() {
        let m = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let h = HermitianMatrix::psd(m.clone()).unwrap();
        let abs = modulus(h.matrix()).unwrap();
        assert!(abs.matrix().sub(&m).frobenius_norm() < 1e-10 * m.frobenius_norm());
    }

    #[test]
    fn singular_values_of_unitary_are_ones() {
        // eigenbasis of a non-trivial Hermitian matrix is unitary
        let m = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        let d = jacobi_eigen(&m).unwrap();
        let sv = singular_values(&d.eigenvectors).unwrap();
        for v in &sv.values {
            assert!((v - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn singular_value_square_sum_is_frobenius() {
        let x = ComplexMatrix::from_rows(&[
            vec![Complex64::new(1.0, 2.0), Complex64::new(-3.0, 0.5)],
            vec![Complex64::new(0.0, -1.0), Complex64::new(4.0, 1.0)],
        ])
        .unwrap();
        let sv = singular_values(&x).unwrap();
        let sum: f64 = sv.values.iter().map(|v| v * v).sum();
        let fro2 = x.frobenius_norm().powi(2);
        assert!((sum - fro2).abs() < 1e-9 * fro2);
    }
}
