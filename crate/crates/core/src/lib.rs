//! Signed neighbourhood corona of signed graphs.
//!
//! * [`graph`]: signed graphs, switching, balance, the corona construction,
//!   edge-list I/O and brute-force isomorphism.
//! * [`linalg`]: exact characteristic polynomials and coronals, Jacobi
//!   eigenvalues, Kronecker products and sums.
//! * [`spectra`]: adjacency, Laplacian and net Laplacian matrices, corona
//!   block forms and closed-form corona spectra.
//! * [`experiments`]: few-distinct-eigenvalue constructions and cospectral
//!   certificates.
//! * [`verify`]: randomized property drivers behind `sncorona verify`.

pub mod experiments;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod spectra;
pub mod verify;

pub use graph::{s_neighbourhood_corona, Sign, SignedGraph};
pub use linalg::SpectrumMultiset;
pub use spectra::MatrixKind;
