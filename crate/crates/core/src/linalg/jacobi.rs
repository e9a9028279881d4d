//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use super::{LinalgError, RealMatrix, SpectrumMultiset, DEFAULT_CLUSTER_TOL};

const SYMMETRY_TOL: f64 = 1e-12;
const CONVERGENCE_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix, ascending.
pub fn jacobi_eigenvalues(m: &RealMatrix) -> Result<Vec<f64>, LinalgError> {
    let n = m.require_square()?;
    if n == 0 {
        return Err(LinalgError::EmptyMatrix);
    }
    let asym = m.max_asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(LinalgError::NotSymmetric(asym));
    }
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let threshold = CONVERGENCE_TOL * (1.0 + m.frobenius_norm());

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation applied on both sides.
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.len();
    for k in 0..n {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}

/// Eigenvalues clustered at the default tolerance.
pub fn sym_eigenvalues(m: &RealMatrix) -> Result<SpectrumMultiset, LinalgError> {
    sym_eigenvalues_with_tol(m, DEFAULT_CLUSTER_TOL)
}

pub fn sym_eigenvalues_with_tol(m: &RealMatrix, tol: f64) -> Result<SpectrumMultiset, LinalgError> {
    Ok(SpectrumMultiset::from_values(&jacobi_eigenvalues(m)?, tol))
}
