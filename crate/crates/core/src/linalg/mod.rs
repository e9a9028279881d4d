//! Exact and numeric linear algebra.
//!
//! The exact kernel works over `BigInt`/`BigRational`: characteristic
//! polynomials, determinants and coronals. The numeric kernel is a cyclic
//! Jacobi solver plus closed-form real roots of quadratics and cubics.

mod charpoly;
mod jacobi;
mod kron;
mod matrix;
mod poly;
mod ratfunc;
mod roots;
mod spectrum;

pub use charpoly::{
    char_poly_exact, coronal, coronal_constant_row_sum, det_bareiss, det_exact_at, det_rational,
};
pub use jacobi::{jacobi_eigenvalues, sym_eigenvalues, sym_eigenvalues_with_tol};
pub use kron::{kronecker_product, kronecker_sum};
pub use matrix::{is_permutation, ones_column, IntMatrix, Matrix, RatMatrix, RealMatrix, Scalar};
pub use poly::{max_abs_coeff, PolyParseError, Polynomial};
pub use ratfunc::RationalFunction;
pub use roots::{real_roots_cubic, real_roots_quadratic};
pub use spectrum::{
    spectra_distance, spectra_equal, Eigenvalue, SpectrumMultiset, DEFAULT_CLUSTER_TOL,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("complex roots detected (discriminant {discriminant:e})")]
    ComplexRootsDetected { discriminant: f64 },
}
