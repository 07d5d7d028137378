//! Dense complex matrix arithmetic, Hermitian spectral decomposition,
//! complex matrix powers, modulus, and singular values.

mod eig;
mod hermitian;
mod json;
mod matrix;

pub use eig::{jacobi_eigen, SpectralDecomposition};
pub use hermitian::{
    matrix_power, modulus, power_of_decomposition, singular_values, spectral_decompose,
    HermitianMatrix, SingularValueVector,
};
pub use json::{matrix_to_json, parse_matrix, read_matrix_file, write_matrix_file};
pub use matrix::ComplexMatrix;

pub use num_complex::Complex64;
