//! Closed-form integer powers of two families of complex anti-tridiagonal
//! matrices, built from Chebyshev spectral sums, together with the
//! Fibonacci-polynomial, Fibonacci and Pell complex product factorizations
//! that fall out of their determinants.
//!
//! Every closed form in this crate has a brute-force counterpart in
//! [`oracle`] (dense products, binary exponentiation, LU) so results can be
//! cross-checked independently.

pub mod chebyshev;
pub mod error;
pub mod family;
pub mod matrix;
pub mod numbers;
pub mod oracle;
pub mod spectral;

pub use error::{Error, Result};
pub use family::{exchange_matrix, AntiTridiagSpec, Family};
pub use matrix::{flip_rows, is_centrosymmetric, ComplexScalar, DenseMatrix};
pub use spectral::{closed_power, closed_power_tilde, eigenvalues_anti, SpectralData};
