//! Exact characteristic polynomials, determinants and coronals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError, Matrix, Polynomial, RatMatrix, RationalFunction};

/// `ψ_M(t) = det(tI − M)` by the Faddeev–LeVerrier recurrence.
///
/// With `M_0 = 0` and `c_n = 1`:
/// `M_k = M·M_{k−1} + c_{n−k+1} I`, `c_{n−k} = −tr(M·M_k) / k`.
/// For integer input every division is exact; this is asserted.
pub fn char_poly_exact(m: &IntMatrix) -> Result<Polynomial, LinalgError> {
    let n = m.require_square()?;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m.matmul(&mk)?;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            mk[(i, i)] += &c;
        }
        let tr = m.matmul(&mk)?.trace();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier division by {k} is not exact");
        coeffs[n - k] = -q;
    }
    Ok(Polynomial::from_integers(coeffs))
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Determinant over the rationals by Gaussian elimination.
pub fn det_rational(m: &RatMatrix) -> Result<BigRational, LinalgError> {
    let n = m.require_square()?;
    let mut a: Vec<Vec<BigRational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let delta = &f * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    Ok(det)
}

/// `det(t₀ I − M)` for rational `t₀ = p/q`, via `det(pI − qM) / qⁿ` and
/// fraction-free elimination.
pub fn det_exact_at(m: &IntMatrix, t0: &BigRational) -> Result<BigRational, LinalgError> {
    let n = m.require_square()?;
    let (p, q) = (t0.numer().clone(), t0.denom().clone());
    let shifted = m.scale(&q).shifted_negation(&p)?;
    let det = det_bareiss(&shifted)?;
    Ok(BigRational::new(det, q.pow(n as u32)))
}

/// The coronal `ϰ_M(t) = jᵀ(tI − M)⁻¹j`.
///
/// By the matrix determinant lemma `det(tI − M + J) = det(tI − M)(1 + ϰ_M(t))`,
/// so `ϰ_M = (ψ_{M−J} − ψ_M) / ψ_M`, reduced.
pub fn coronal(m: &IntMatrix) -> Result<RationalFunction, LinalgError> {
    let n = m.require_square()?;
    let psi = char_poly_exact(m)?;
    let psi_shift = char_poly_exact(&m.sub(&Matrix::ones(n, n))?)?;
    RationalFunction::new(&psi_shift - &psi, psi)
}

/// `n / (t − k)`: the coronal of any order-`n` matrix whose rows all sum to `k`.
pub fn coronal_constant_row_sum(n: usize, k: &BigRational) -> Result<RationalFunction, LinalgError> {
    if n == 0 {
        return Err(LinalgError::EmptyMatrix);
    }
    let num = Polynomial::constant(BigRational::from_integer(BigInt::from(n)));
    RationalFunction::new(num, Polynomial::linear_factor(k.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn c4_minus() -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[0, 1, 0, -1], &[1, 0, 1, 0], &[0, 1, 0, 1], &[-1, 0, 1, 0]]).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let zero = IntMatrix::from_i64_rows(&[&[0]]).unwrap();
        assert_eq!(char_poly_exact(&zero).unwrap(), Polynomial::t());
        let k2 = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(char_poly_exact(&k2).unwrap(), Polynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly_exact(&c4_minus()).unwrap(), Polynomial::from_i64(&[4, 0, -4, 0, 1]));
        assert!(char_poly_exact(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn det_examples() {
        let k2 = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(det_exact_at(&k2, &rat(2)).unwrap(), rat(3));
        assert_eq!(det_exact_at(&k2, &rat(1)).unwrap(), rat(0));
        assert_eq!(det_exact_at(&c4_minus(), &rat(0)).unwrap(), rat(4));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(det_exact_at(&k2, &half).unwrap(), BigRational::new((-3).into(), 4.into()));
        assert_eq!(det_rational(&k2.to_rational()).unwrap(), rat(-1));
        assert!(det_exact_at(&IntMatrix::zeros(1, 2), &rat(0)).is_err());
    }

    #[test]
    fn coronal_examples() {
        let k1 = IntMatrix::from_i64_rows(&[&[0]]).unwrap();
        let c = coronal(&k1).unwrap();
        assert_eq!(c, RationalFunction::new(Polynomial::one(), Polynomial::t()).unwrap());
        // all-negative K_{1,1}: (2t - 2)/(t^2 - 1) = 2/(t + 1)
        let k11 = IntMatrix::from_i64_rows(&[&[0, -1], &[-1, 0]]).unwrap();
        let expected = RationalFunction::new(Polynomial::from_i64(&[2]), Polynomial::from_i64(&[1, 1])).unwrap();
        assert_eq!(coronal(&k11).unwrap(), expected);
        assert_eq!(coronal_constant_row_sum(1, &rat(0)).unwrap(), c);
        assert_eq!(
            coronal_constant_row_sum(3, &rat(2)).unwrap(),
            RationalFunction::new(Polynomial::from_i64(&[3]), Polynomial::from_i64(&[-2, 1])).unwrap()
        );
    }
}
