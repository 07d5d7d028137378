//! The central expressions: the Bourin sum b_t, the Heinz sum h_t, the
//! complex trace functional f(z) = tau(A^z B^z A^{1-z} B^{1-z}), and the
//! commutation diagnostic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{
    power_of_decomposition, spectral_decompose, ComplexMatrix, HermitianMatrix,
    SpectralDecomposition,
};

/// Defect at or below this is treated as "A commutes with B".
pub const COMMUTING_DEFECT_TOL: f64 = 1e-9;

/// A psd pair (A, B) with their spectral decompositions computed once at
/// construction; all powers come out of the cached decompositions.
#[derive(Debug, Clone)]
pub struct MeanPair {
    a: HermitianMatrix,
    b: HermitianMatrix,
    da: SpectralDecomposition,
    db: SpectralDecomposition,
}

impl MeanPair {
    pub fn new(a: HermitianMatrix, b: HermitianMatrix) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch(a.dim(), b.dim()));
        }
        if !a.is_psd() || !b.is_psd() {
            return Err(Error::NotPsd {
                eigenvalue: f64::NAN,
                floor: 0.0,
            });
        }
        let da = spectral_decompose(&a)?;
        let db = spectral_decompose(&b)?;
        Ok(MeanPair { a, b, da, db })
    }

    pub fn a(&self) -> &HermitianMatrix {
        &self.a
    }

    pub fn b(&self) -> &HermitianMatrix {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn is_pd(&self) -> bool {
        self.a.is_pd() && self.b.is_pd()
    }

    /// The pair with the roles of A and B exchanged.
    pub fn swapped(&self) -> MeanPair {
        MeanPair {
            a: self.b.clone(),
            b: self.a.clone(),
            da: self.db.clone(),
            db: self.da.clone(),
        }
    }

    pub fn a_power(&self, z: Complex64) -> Result<ComplexMatrix> {
        power_of_decomposition(&self.da, z)
    }

    pub fn b_power(&self, z: Complex64) -> Result<ComplexMatrix> {
        power_of_decomposition(&self.db, z)
    }

    /// A + B.
    pub fn sum(&self) -> ComplexMatrix {
        self.a.matrix().add(self.b.matrix())
    }

    /// tau(AB).
    pub fn tau_ab(&self) -> f64 {
        self.a.matrix().mul(self.b.matrix()).trace().re
    }
}

fn real(t: f64) -> Complex64 {
    Complex64::new(t, 0.0)
}

/// b_t(A, B) = A^t B^{1-t} + B^t A^{1-t}, t in [0, 1].
pub fn bourin_mean(pair: &MeanPair, t: f64) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::TOutOfUnit(t));
    }
    let at = pair.a_power(real(t))?;
    let a1t = pair.a_power(real(1.0 - t))?;
    let bt = pair.b_power(real(t))?;
    let b1t = pair.b_power(real(1.0 - t))?;
    Ok(at.mul(&b1t).add(&bt.mul(&a1t)))
}

/// h_t(A, B) = A^t B^{1-t} + A^{1-t} B^t, t in [0, 1].
pub fn heinz_sum(pair: &MeanPair, t: f64) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::TOutOfUnit(t));
    }
    let at = pair.a_power(real(t))?;
    let a1t = pair.a_power(real(1.0 - t))?;
    let bt = pair.b_power(real(t))?;
    let b1t = pair.b_power(real(1.0 - t))?;
    Ok(at.mul(&b1t).add(&a1t.mul(&bt)))
}

fn product_chain(pair: &MeanPair, z: Complex64) -> Result<ComplexMatrix> {
    let one_minus = Complex64::new(1.0 - z.re, -z.im);
    let az = pair.a_power(z)?;
    let bz = pair.b_power(z)?;
    let a1z = pair.a_power(one_minus)?;
    let b1z = pair.b_power(one_minus)?;
    Ok(az.mul(&bz).mul(&a1z).mul(&b1z))
}

/// f(z) = tau(A^z B^z A^{1-z} B^{1-z}) = Re Tr(...).
pub fn trace_functional(pair: &MeanPair, z: Complex64) -> Result<f64> {
    Ok(product_chain(pair, z)?.trace().re)
}

/// Full complex trace of the product chain; for non-real z the trace need
/// not be real, this exposes the imaginary part for diagnostics.
pub fn trace_functional_complex(pair: &MeanPair, z: Complex64) -> Result<Complex64> {
    Ok(product_chain(pair, z)?.trace())
}

/// ||AB - BA||_F / max(1, ||A||_F ||B||_F); zero (up to tolerance) iff
/// A and B commute.
pub fn commutator_defect(pair: &MeanPair) -> f64 {
    let a = pair.a.matrix();
    let b = pair.b.matrix();
    let comm = a.mul(b).sub(&b.mul(a));
    comm.frobenius_norm() / (a.frobenius_norm() * b.frobenius_norm()).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::{norm, tau, NormKind};

    fn pair_from_diags(a: &[f64], b: &[f64]) -> MeanPair {
        MeanPair::new(
            HermitianMatrix::psd(ComplexMatrix::diagonal(a)).unwrap(),
            HermitianMatrix::psd(ComplexMatrix::diagonal(b)).unwrap(),
        )
        .unwrap()
    }

    fn example1() -> MeanPair {
        let a = HermitianMatrix::psd(ComplexMatrix::diagonal(&[1141.0, 204.0, 0.125])).unwrap();
        let b = HermitianMatrix::psd(
            ComplexMatrix::from_real_rows(&[
                vec![39.0, 90.0, 43.0],
                vec![90.0, 418.0, 370.0],
                vec![43.0, 370.0, 426.0],
            ])
            .unwrap(),
        )
        .unwrap();
        MeanPair::new(a, b).unwrap()
    }

    #[test]
    fn identity_pair_means() {
        let i3 = || HermitianMatrix::psd(ComplexMatrix::identity(3)).unwrap();
        let pair = MeanPair::new(i3(), i3()).unwrap();
        let two_i = ComplexMatrix::identity(3).scale(Complex64::new(2.0, 0.0));
        for t in [0.0, 0.3, 0.5, 1.0] {
            assert!(bourin_mean(&pair, t).unwrap().sub(&two_i).frobenius_norm() < 1e-12);
            assert!(heinz_sum(&pair, t).unwrap().sub(&two_i).frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn bourin_half_is_hermitian() {
        let pair = example1();
        let b = bourin_mean(&pair, 0.5).unwrap();
        assert!(b.hermitian_deviation() < 1e-10 * (1.0 + b.max_abs()));
    }

    #[test]
    fn heinz_endpoints_are_sum() {
        let pair = example1();
        let sum = pair.sum();
        for t in [0.0, 1.0] {
            let h = heinz_sum(&pair, t).unwrap();
            assert!(h.sub(&sum).frobenius_norm() < 1e-9 * sum.frobenius_norm());
        }
    }

    #[test]
    fn trace_functional_commuting_is_tau_ab() {
        let pair = pair_from_diags(&[3.0, 1.5, 0.2], &[2.0, 5.0, 0.7]);
        let expect = pair.tau_ab();
        for z in [
            Complex64::new(0.3, 0.0),
            Complex64::new(0.5, 2.0),
            Complex64::new(1.0, -1.0),
        ] {
            let f = trace_functional(&pair, z).unwrap();
            assert!((f - expect).abs() < 1e-9 * expect.abs());
        }
    }

    #[test]
    fn trace_functional_endpoint_z1() {
        let pair = example1();
        let f = trace_functional(&pair, Complex64::new(1.0, 0.0)).unwrap();
        let expect = pair.tau_ab();
        assert!((f - expect).abs() < 1e-9 * expect.abs());
    }

    // two independent routes to f(1/2): the product chain versus
    // Re Tr(X^2) with X = A^{1/2} B^{1/2} formed explicitly
    #[test]
    fn trace_functional_half_agrees_with_square_route() {
        let pair = example1();
        let f = trace_functional(&pair, Complex64::new(0.5, 0.0)).unwrap();
        let x = pair
            .a_power(Complex64::new(0.5, 0.0))
            .unwrap()
            .mul(&pair.b_power(Complex64::new(0.5, 0.0)).unwrap());
        let alt = x.mul(&x).trace().re;
        assert!((f - alt).abs() < 1e-9 * alt.abs());
        assert!(f <= pair.tau_ab());
    }

    #[test]
    fn commutator_defect_cases() {
        let commuting = pair_from_diags(&[1.0, 2.0], &[3.0, 4.0]);
        assert!(commutator_defect(&commuting) <= 1e-12);

        let pair = example1();
        assert!(commutator_defect(&pair) > 1e-6);

        let a = HermitianMatrix::psd(
            ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap(),
        )
        .unwrap();
        let same = MeanPair::new(a.clone(), a).unwrap();
        assert!(commutator_defect(&same) <= 1e-12);
    }

    // ||h_t||_2^2 - ||b_t||_2^2 = 2 (tau(AB) - f(t)), an exact identity
    #[test]
    fn frobenius_identity_example1() {
        let pair = example1();
        for t in [0.1, 0.25, 0.5, 0.75, 0.9] {
            let hn = norm(&heinz_sum(&pair, t).unwrap(), NormKind::Frobenius).unwrap();
            let bn = norm(&bourin_mean(&pair, t).unwrap(), NormKind::Frobenius).unwrap();
            let lhs = hn * hn - bn * bn;
            let rhs =
                2.0 * (pair.tau_ab() - trace_functional(&pair, Complex64::new(t, 0.0)).unwrap());
            assert!(
                (lhs - rhs).abs() <= 1e-8 * hn * hn,
                "identity broken at t={t}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn symmetry_in_z_and_swap() {
        let pair = example1();
        let swapped = pair.swapped();
        for z in [Complex64::new(0.3, 1.0), Complex64::new(0.6, -2.0)] {
            let f1 = trace_functional(&pair, z).unwrap();
            let f2 = trace_functional(&swapped, Complex64::new(1.0 - z.re, -z.im)).unwrap();
            assert!((f1 - f2).abs() < 1e-9 * f1.abs().max(1.0));
        }
    }

    #[test]
    fn mean_symmetries() {
        let pair = example1();
        let swapped = pair.swapped();
        for t in [0.15, 0.4, 0.7] {
            // b_{1-t}(B, A) is the adjoint of b_t(A, B); unitarily invariant
            // norms cannot tell them apart
            let b1 = bourin_mean(&pair, t).unwrap();
            let b2 = bourin_mean(&swapped, 1.0 - t).unwrap();
            assert!(b1.adjoint().sub(&b2).frobenius_norm() < 1e-9 * b1.frobenius_norm());
            let n1 = norm(&b1, NormKind::Schatten(3.0)).unwrap();
            let n2 = norm(&b2, NormKind::Schatten(3.0)).unwrap();
            assert!((n1 - n2).abs() < 1e-9 * n1);

            let h1 = heinz_sum(&pair, t).unwrap();
            let h2 = heinz_sum(&pair, 1.0 - t).unwrap();
            assert!(h1.sub(&h2).frobenius_norm() < 1e-9 * h1.frobenius_norm());
        }
    }

    #[test]
    fn commuting_pair_means_agree() {
        let pair = pair_from_diags(&[3.0, 1.0, 0.5], &[2.0, 4.0, 6.0]);
        for t in [0.1, 0.5, 0.8] {
            let b = bourin_mean(&pair, t).unwrap();
            let h = heinz_sum(&pair, t).unwrap();
            assert!(b.sub(&h).frobenius_norm() <= 1e-9 * h.frobenius_norm());
        }
        let _ = tau(&pair.sum());
    }
}
