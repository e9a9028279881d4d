//! Matrices of signed graphs and spectra of the s-neighbourhood corona.

mod blocks;
mod closed_form;

pub use blocks::{assemble_corona_blocks, corona_adjacency_charpoly_eval, corona_block_permutation};
pub use closed_form::{
    as_complete_bipartite, closed_form,
    closed_form_adjacency, closed_form_adjacency_kpq, closed_form_adjacency_kpq_variant,
    closed_form_laplacian, closed_form_laplacian_balanced_as_printed, closed_form_netlaplacian,
    realize, realize_with_tol, ClosedFormEntry, ClosedFormSpectrum, CubicVariant, Theorem,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SignedGraph;
use crate::linalg::{
    char_poly_exact, sym_eigenvalues_with_tol, IntMatrix, LinalgError, Matrix, Polynomial,
    SpectrumMultiset, DEFAULT_CLUSTER_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    NetLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NetLaplacian];

    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adj",
            MatrixKind::Laplacian => "lap",
            MatrixKind::NetLaplacian => "netlap",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adj" | "adjacency" => Ok(MatrixKind::Adjacency),
            "lap" | "laplacian" => Ok(MatrixKind::Laplacian),
            "netlap" | "net-laplacian" => Ok(MatrixKind::NetLaplacian),
            other => Err(format!("unknown matrix kind {other:?} (expected adj, lap or netlap)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("S2 is not net-regular")]
    NotNetRegular,
    #[error("net degree {0} is not an adjacency eigenvalue of S2")]
    NetDegreeNotAnEigenvalue(i64),
    #[error("S1 is not regular")]
    NotRegular,
    #[error("S1 is not net-regular")]
    S1NotNetRegular,
    #[error("Laplacian row-sum constant {0} is not a Laplacian eigenvalue of S2")]
    RowSumEigenvalueMissing(i64),
    #[error("S2 is balanced but its Laplacian rows do not all sum to the same constant; the closed form does not apply")]
    NonConstantRowSum,
    #[error("S2 is neither regular and net-regular nor connected and balanced")]
    HypothesisNotMet,
    #[error("S1 is 0-regular; the degree matrix is singular")]
    ZeroDegree,
    #[error("S1 has net degree 0; the net degree matrix is singular, use the numeric spectrum")]
    ZeroNetDegree,
    #[error("evaluation point is a root of the characteristic polynomial of S2")]
    PoleAtEvaluationPoint,
    #[error("p and q must be positive")]
    InvalidPartSizes,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `A_S`, `L_S = D_S − A_S` or `N_S = D_S^± − A_S`.
pub fn matrix_of(s: &SignedGraph, kind: MatrixKind) -> IntMatrix {
    let n = s.order();
    let mut m = Matrix::zeros(n, n);
    for e in s.edges() {
        let a = BigInt::from(e.sign.value());
        m[(e.u, e.v)] = a.clone();
        m[(e.v, e.u)] = a;
    }
    if kind == MatrixKind::Adjacency {
        return m;
    }
    let degrees = s.degrees();
    let mut out = m.map(|x| -x);
    for (v, d) in degrees.vertices.iter().enumerate() {
        out[(v, v)] = match kind {
            MatrixKind::Laplacian => BigInt::from(d.degree),
            _ => BigInt::from(d.net),
        };
    }
    out
}

/// Diagonal degree matrix `D_S`.
pub fn degree_matrix(s: &SignedGraph) -> IntMatrix {
    let d: Vec<BigInt> = s.degrees().vertices.iter().map(|d| BigInt::from(d.degree)).collect();
    Matrix::diagonal(&d)
}

/// Diagonal net-degree matrix `D_S^±`.
pub fn net_degree_matrix(s: &SignedGraph) -> IntMatrix {
    let d: Vec<BigInt> = s.degrees().vertices.iter().map(|d| BigInt::from(d.net)).collect();
    Matrix::diagonal(&d)
}

pub fn numeric_spectrum(s: &SignedGraph, kind: MatrixKind) -> Result<SpectrumMultiset, SpectraError> {
    numeric_spectrum_with_tol(s, kind, DEFAULT_CLUSTER_TOL)
}

pub fn numeric_spectrum_with_tol(
    s: &SignedGraph,
    kind: MatrixKind,
    tol: f64,
) -> Result<SpectrumMultiset, SpectraError> {
    Ok(sym_eigenvalues_with_tol(&matrix_of(s, kind).to_real(), tol)?)
}

/// Exact characteristic polynomial of the chosen matrix.
pub fn characteristic_polynomial(s: &SignedGraph, kind: MatrixKind) -> Polynomial {
    char_poly_exact(&matrix_of(s, kind)).expect("graph matrices are square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, Sign};

    #[test]
    fn k2_matrices() {
        let k2 = catalog::complete(2, Sign::Positive);
        let a = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let l = IntMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]).unwrap();
        assert_eq!(matrix_of(&k2, MatrixKind::Adjacency), a);
        assert_eq!(matrix_of(&k2, MatrixKind::Laplacian), l);
        assert_eq!(matrix_of(&k2, MatrixKind::NetLaplacian), l);
    }

    #[test]
    fn negative_k2_matrices() {
        let k2 = catalog::complete(2, Sign::Negative);
        assert_eq!(
            matrix_of(&k2, MatrixKind::Adjacency),
            IntMatrix::from_i64_rows(&[&[0, -1], &[-1, 0]]).unwrap()
        );
        assert_eq!(
            matrix_of(&k2, MatrixKind::Laplacian),
            IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]).unwrap()
        );
        assert_eq!(
            matrix_of(&k2, MatrixKind::NetLaplacian),
            IntMatrix::from_i64_rows(&[&[-1, 1], &[1, -1]]).unwrap()
        );
    }

    #[test]
    fn row_sums() {
        let g = catalog::c4_minus();
        let n = matrix_of(&g, MatrixKind::NetLaplacian);
        assert!(n.row_sums().iter().all(|x| *x == BigInt::from(0)));
        let l = matrix_of(&g, MatrixKind::Laplacian);
        let d = g.degrees();
        for (v, sum) in l.row_sums().iter().enumerate() {
            assert_eq!(*sum, BigInt::from(2 * d.vertices[v].negative));
        }
    }

    #[test]
    fn numeric_spectra() {
        let s = numeric_spectrum(&catalog::c4_minus(), MatrixKind::Adjacency).unwrap();
        assert_eq!(s.to_string(), "-1.41421 x2, 1.41421 x2");
        let l = numeric_spectrum(&catalog::path(4, Sign::Positive), MatrixKind::Laplacian).unwrap();
        assert!(l.multiplicity_of(0.0, 1e-9) == 1);
        let n = numeric_spectrum(&catalog::c4_minus(), MatrixKind::NetLaplacian).unwrap();
        assert!(n.multiplicity_of(0.0, 1e-9) >= 1);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("adj".parse::<MatrixKind>(), Ok(MatrixKind::Adjacency));
        assert_eq!("netlap".parse::<MatrixKind>(), Ok(MatrixKind::NetLaplacian));
        assert!("foo".parse::<MatrixKind>().is_err());
    }
}
