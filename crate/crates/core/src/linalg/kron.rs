use super::{LinalgError, Matrix, Scalar};

/// `C ⊗ D`: every entry `c_ij` of `C` replaced by the block `c_ij·D`.
pub fn kronecker_product<T: Scalar>(c: &Matrix<T>, d: &Matrix<T>) -> Matrix<T> {
    let (p, q) = (d.rows(), d.cols());
    Matrix::from_fn(c.rows() * p, c.cols() * q, |i, j| {
        c[(i / p, j / q)].clone() * d[(i % p, j % q)].clone()
    })
}

/// `D ⊕ C = C ⊗ I_p + I_n ⊗ D` for `C` of order `n` and `D` of order `p`.
pub fn kronecker_sum<T: Scalar>(d: &Matrix<T>, c: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
    let p = d.require_square()?;
    let n = c.require_square()?;
    kronecker_product(c, &Matrix::identity(p)).add(&kronecker_product(&Matrix::identity(n), d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    #[test]
    fn identity_products() {
        let i6 = kronecker_product(&IntMatrix::identity(2), &IntMatrix::identity(3));
        assert_eq!(i6, IntMatrix::identity(6));
    }

    #[test]
    fn product_shape_and_blocks() {
        let c = IntMatrix::from_i64_rows(&[&[1, 2]]).unwrap();
        let d = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0], &[1, 1]]).unwrap();
        let k = kronecker_product(&c, &d);
        assert_eq!((k.rows(), k.cols()), (3, 4));
        assert_eq!(k.to_string(), "0 1 0 2\n1 0 2 0\n1 1 2 2\n");
    }

    #[test]
    fn sum_with_zero_scalar_is_identity_map() {
        let a = IntMatrix::from_i64_rows(&[&[0, 1, -1], &[1, 2, 0], &[-1, 0, 3]]).unwrap();
        assert_eq!(kronecker_sum(&IntMatrix::zeros(1, 1), &a).unwrap(), a);
        assert!(kronecker_sum(&IntMatrix::zeros(1, 2), &a).is_err());
    }

    #[test]
    fn sum_convention() {
        // D ⊕ C with C = [[c]] (n = 1) is c·I + D
        let c = IntMatrix::from_i64_rows(&[&[5]]).unwrap();
        let d = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let s = kronecker_sum(&d, &c).unwrap();
        assert_eq!(s, IntMatrix::from_i64_rows(&[&[5, 1], &[1, 5]]).unwrap());
    }
}
