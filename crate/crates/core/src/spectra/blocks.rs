//! Block forms of the corona matrices and the factored adjacency
//! characteristic polynomial.
//!
//! Block rows and columns use the partition `V(S₁) ∪ V₁ ∪ … ∪ V_{n₂}` where
//! `V_i` collects the `i`-th vertex of every copy of `S₂` (vertex-major). The
//! corona itself is laid out copy-major; [`corona_block_permutation`] maps
//! one onto the other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{degree_matrix, matrix_of, net_degree_matrix, MatrixKind, SpectraError};
use crate::graph::SignedGraph;
use crate::linalg::{
    char_poly_exact, coronal, det_rational, kronecker_product, kronecker_sum, IntMatrix, Matrix,
};

/// `perm[i]` is the block-partition index of corona vertex `i`.
pub fn corona_block_permutation(n1: usize, n2: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n1).collect();
    for copy in 0..n1 {
        for u in 0..n2 {
            perm.push(n1 + u * n1 + copy);
        }
    }
    perm
}

/// The 2×2 block matrix of `S₁ ⋆ₛ S₂` for `kind`, in block order:
///
/// * adjacency: `[[A₁, jᵀ⊗A₁], [(jᵀ⊗A₁)ᵀ, A₂⊗I]]`
/// * Laplacian: `[[L₁ + n₂D₁, −jᵀ⊗A₁], [·ᵀ, D₁ ⊕ L₂]]`
/// * net Laplacian: `[[N₁ + n₂D₁^±, −jᵀ⊗A₁], [·ᵀ, D₁^± ⊕ N₂]]`
pub fn assemble_corona_blocks(s1: &SignedGraph, s2: &SignedGraph, kind: MatrixKind) -> IntMatrix {
    let (n1, n2) = (s1.order(), s2.order());
    let a1 = matrix_of(s1, MatrixKind::Adjacency);
    let link = kronecker_product(&Matrix::ones(1, n2), &a1);
    let n2_big = BigInt::from(n2);
    let (top_left, top_right, bottom_right) = match kind {
        MatrixKind::Adjacency => {
            let a2 = matrix_of(s2, MatrixKind::Adjacency);
            (a1.clone(), link, kronecker_product(&a2, &Matrix::identity(n1)))
        }
        MatrixKind::Laplacian => {
            let d1 = degree_matrix(s1);
            let tl = matrix_of(s1, MatrixKind::Laplacian).add(&d1.scale(&n2_big)).unwrap();
            let br = kronecker_sum(&d1, &matrix_of(s2, MatrixKind::Laplacian)).unwrap();
            (tl, link.map(|x| -x), br)
        }
        MatrixKind::NetLaplacian => {
            let d1 = net_degree_matrix(s1);
            let tl = matrix_of(s1, MatrixKind::NetLaplacian).add(&d1.scale(&n2_big)).unwrap();
            let br = kronecker_sum(&d1, &matrix_of(s2, MatrixKind::NetLaplacian)).unwrap();
            (tl, link.map(|x| -x), br)
        }
    };
    let bottom_left = top_right.transpose();
    Matrix::block2(&top_left, &top_right, &bottom_left, &bottom_right).expect("block shapes agree")
}

/// Evaluates `ψ_{A₂}(t₀)^{n₁} · det(t₀I − A₁ − ϰ_{A₂}(t₀)·A₁²)` exactly.
///
/// This equals `det(t₀I − A)` for the corona adjacency matrix `A` whenever
/// `t₀` is not an adjacency eigenvalue of `S₂`.
pub fn corona_adjacency_charpoly_eval(
    s1: &SignedGraph,
    s2: &SignedGraph,
    t0: &BigRational,
) -> Result<BigRational, SpectraError> {
    let a1 = matrix_of(s1, MatrixKind::Adjacency);
    let a2 = matrix_of(s2, MatrixKind::Adjacency);
    let psi2 = char_poly_exact(&a2)?.eval(t0);
    if psi2.is_zero() {
        return Err(SpectraError::PoleAtEvaluationPoint);
    }
    let kappa = coronal(&a2)?.eval(t0).ok_or(SpectraError::PoleAtEvaluationPoint)?;
    let a1 = a1.to_rational();
    let shifted = a1.add(&a1.matmul(&a1)?.scale(&kappa))?;
    let det = det_rational(&shifted.shifted_negation(t0)?)?;
    let n1 = s1.order();
    let power = (0..n1).fold(BigRational::one(), |acc, _| acc * &psi2);
    Ok(power * det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, s_neighbourhood_corona, Sign};
    use crate::linalg::{det_exact_at, is_permutation};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn permutation_is_valid() {
        let p = corona_block_permutation(3, 4);
        assert_eq!(p.len(), 15);
        assert!(is_permutation(&p));
        // copy 1, vertex 2 -> block V_2, slot 1
        assert_eq!(p[3 + 4 + 2], 3 + 2 * 3 + 1);
    }

    #[test]
    fn blocks_match_direct_construction() {
        let s1 = catalog::c4_minus();
        let s2 = catalog::path(3, Sign::Negative);
        let corona = s_neighbourhood_corona(&s1, &s2);
        let perm = corona_block_permutation(4, 3);
        for kind in MatrixKind::ALL {
            let direct = matrix_of(&corona, kind).permute_symmetric(&perm);
            assert_eq!(assemble_corona_blocks(&s1, &s2, kind), direct, "{kind}");
        }
    }

    #[test]
    fn k1_companion_has_zero_bottom_block() {
        let s1 = catalog::c4_minus();
        let m = assemble_corona_blocks(&s1, &catalog::k1(), MatrixKind::Adjacency);
        for i in 4..8 {
            for j in 4..8 {
                assert!(m[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn edgeless_s1_has_no_link_blocks() {
        let s1 = SignedGraph::empty(3);
        let s2 = catalog::complete(3, Sign::Positive);
        for kind in MatrixKind::ALL {
            let m = assemble_corona_blocks(&s1, &s2, kind);
            for i in 0..3 {
                for j in 3..12 {
                    assert!(m[(i, j)].is_zero() && m[(j, i)].is_zero());
                }
            }
        }
    }

    #[test]
    fn factored_eval_k2_k1() {
        let s1 = catalog::complete(2, Sign::Positive);
        let s2 = catalog::k1();
        let corona = s_neighbourhood_corona(&s1, &s2);
        let direct = det_exact_at(&matrix_of(&corona, MatrixKind::Adjacency), &rat(3)).unwrap();
        assert_eq!(corona_adjacency_charpoly_eval(&s1, &s2, &rat(3)).unwrap(), direct);
        // path on 4 vertices: t^4 − 3t^2 + 1 at 3 is 55
        assert_eq!(direct, rat(55));
    }

    #[test]
    fn edgeless_s1_reduces_to_powers() {
        let s1 = SignedGraph::empty(2);
        let s2 = catalog::complete(2, Sign::Negative);
        let t0 = rat(3);
        let psi2 = char_poly_exact(&matrix_of(&s2, MatrixKind::Adjacency)).unwrap().eval(&t0);
        let expected = psi2.clone() * psi2 * &t0 * &t0;
        assert_eq!(corona_adjacency_charpoly_eval(&s1, &s2, &t0).unwrap(), expected);
    }

    #[test]
    fn pole_is_reported() {
        let s2 = catalog::complete(2, Sign::Positive);
        assert_eq!(
            corona_adjacency_charpoly_eval(&catalog::c4_minus(), &s2, &rat(1)),
            Err(SpectraError::PoleAtEvaluationPoint)
        );
    }
}
