use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{LinalgError, Polynomial};

/// A reduced quotient of polynomials with monic denominator, so structural
/// equality is equality of rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, LinalgError> {
        if denominator.is_zero() {
            return Err(LinalgError::ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction { numerator, denominator: Polynomial::one() });
        }
        let g = Polynomial::gcd(&numerator, &denominator);
        let (num, r1) = numerator.div_rem(&g);
        let (den, r2) = denominator.div_rem(&g);
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lead = den.leading().unwrap().recip();
        Ok(RationalFunction { numerator: num.scale(&lead), denominator: den.scale(&lead) })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Value at `t`, or `None` at a pole.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let d = self.denominator.eval(t);
        (!d.is_zero()).then(|| self.numerator.eval(t) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalises() {
        // (2t - 2) / (t^2 - 1) = 2 / (t + 1)
        let f = RationalFunction::new(Polynomial::from_i64(&[-2, 2]), Polynomial::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(f.numerator(), &Polynomial::from_i64(&[2]));
        assert_eq!(f.denominator(), &Polynomial::from_i64(&[1, 1]));
        // scaling both parts gives the same canonical form
        let g = RationalFunction::new(Polynomial::from_i64(&[-6, 6]), Polynomial::from_i64(&[-3, 0, 3])).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn poles_and_zero() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::t()).unwrap();
        assert_eq!(f.eval(&BigRational::zero()), None);
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
        let z = RationalFunction::new(Polynomial::zero(), Polynomial::t()).unwrap();
        assert_eq!(z.denominator(), &Polynomial::one());
    }
}
