//! Numerical verification library for trace and norm inequalities between
//! the Bourin sum b_t(A,B) = A^t B^{1-t} + B^t A^{1-t}, the Heinz sum
//! h_t(A,B) = A^t B^{1-t} + A^{1-t} B^t, and A + B for positive
//! semidefinite matrices, including the complex-parameter trace functional
//! f(z) = Re Tr(A^z B^z A^{1-z} B^{1-z}) on vertical strips, and a seeded
//! counterexample search around the two built-in counterexample pairs.

pub mod cli;
pub mod error;
pub mod explore;
pub mod matcore;
pub mod means;
pub mod norms;
pub mod verify;

pub use error::{Error, Result};
